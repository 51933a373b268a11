#include "schurlab/characters.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

namespace schurlab {

Int class_size(const Partition& cycles) {
  const int k = cycles.k();
  // k! / prod_m (m^{c_m} c_m!)
  Int den = 1;
  std::map<int, int> mult;
  for (int m : cycles.parts()) ++mult[m];
  for (auto [m, c] : mult) {
    for (int i = 0; i < c; ++i) den *= m;
    den *= factorial(c);
  }
  Int num = factorial(k);
  if (num % den != 0) throw std::logic_error("class_size: non-integral");
  return num / den;
}

std::vector<CycleType> conjugacy_classes(int k) {
  if (k < 1 || k > 14) throw std::invalid_argument("conjugacy_classes: need 1 <= k <= 14");
  std::vector<CycleType> out;
  for (const Partition& mu : enumerate_partitions(k))
    out.push_back({mu, class_size(mu)});
  return out;
}

namespace {

// Murnaghan-Nakayama via beta numbers: lambda is encoded by the strictly
// decreasing set {lambda_i + (L - i)}.  Removing a border strip of length m
// moves one beta number down by m; the sign is (-1)^{#beta numbers jumped}.
long long mn_character(std::vector<int> lambda, std::vector<int> cycles);

std::map<std::pair<std::vector<int>, std::vector<int>>, long long> g_memo;
std::mutex g_memo_mutex;

long long mn_character_impl(const std::vector<int>& lambda,
                            const std::vector<int>& cycles) {
  if (cycles.empty()) return 1;  // lambda is empty too
  const int L = static_cast<int>(lambda.size());
  const int m = cycles.front();
  std::vector<int> rest(cycles.begin() + 1, cycles.end());

  std::vector<int> beta(L);
  for (int i = 0; i < L; ++i) beta[i] = lambda[i] + (L - 1 - i);
  // beta is strictly decreasing
  long long total = 0;
  for (int i = 0; i < L; ++i) {
    const int target = beta[i] - m;
    if (target < 0) continue;
    bool occupied = false;
    int jumped = 0;
    for (int j = 0; j < L; ++j) {
      if (j == i) continue;
      if (beta[j] == target) { occupied = true; break; }
      if (beta[j] < beta[i] && beta[j] > target) ++jumped;
    }
    if (occupied) continue;
    std::vector<int> nb = beta;
    nb[i] = target;
    std::sort(nb.begin(), nb.end(), std::greater<int>());
    std::vector<int> nl(L);
    for (int j = 0; j < L; ++j) nl[j] = nb[j] - (L - 1 - j);
    while (!nl.empty() && nl.back() == 0) nl.pop_back();
    const long long sign = (jumped % 2 == 0) ? 1 : -1;
    total += sign * mn_character(nl, rest);
  }
  return total;
}

long long mn_character(std::vector<int> lambda, std::vector<int> cycles) {
  // cycle order is irrelevant; keep it sorted descending for the memo key
  std::sort(cycles.begin(), cycles.end(), std::greater<int>());
  const auto key = std::make_pair(lambda, cycles);
  {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    auto it = g_memo.find(key);
    if (it != g_memo.end()) return it->second;
  }
  const long long value = mn_character_impl(lambda, cycles);
  std::lock_guard<std::mutex> lock(g_memo_mutex);
  g_memo.emplace(key, value);
  return value;
}

}  // namespace

long long character(const Partition& lambda, const Partition& mu) {
  if (lambda.k() != mu.k())
    throw std::invalid_argument("character: lambda and mu are partitions of different k");
  return mn_character(lambda.parts(), mu.parts());
}

Rat central_character_transposition(const Partition& lambda) {
  const int k = lambda.k();
  if (k < 2) throw std::invalid_argument("central_character_transposition: k >= 2 required");
  std::vector<int> tau_parts{2};
  for (int i = 0; i < k - 2; ++i) tau_parts.push_back(1);
  const Partition tau(tau_parts);
  Rat r(Int(k) * (k - 1) / 2 * character(lambda, tau), dim_sym_irrep(lambda));
  return r;
}

}  // namespace schurlab
