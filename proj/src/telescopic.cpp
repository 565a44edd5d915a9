#include "nsemi/telescopic.hpp"

#include <algorithm>
#include <numeric>

#include "nsemi/bounds.hpp"
#include "nsemi/errors.hpp"

namespace nsemi {

namespace {

std::vector<Int> gcd_chain(const std::vector<Int>& gens) {
  std::vector<Int> d;
  d.reserve(gens.size());
  Int g = 0;
  for (Int a : gens) {
    g = std::gcd(g, a);
    d.push_back(g);
  }
  return d;
}

Int closed_form_frobenius(const std::vector<Int>& gens,
                          const std::vector<Int>& d) {
  Int f = -gens[0];
  for (std::size_t j = 1; j < gens.size(); ++j)
    f = checked_add(f, checked_mul(d[j - 1] / d[j] - 1, gens[j]));
  return f;
}

// x = a^{-1} mod m for gcd(a, m) = 1.
Int mod_inverse(Int a, Int m) {
  Int t = 0, new_t = 1, r = m, new_r = ((a % m) + m) % m;
  while (new_r != 0) {
    Int q = r / new_r;
    std::tie(t, new_t) = std::pair<Int, Int>{new_t, t - q * new_t};
    std::tie(r, new_r) = std::pair<Int, Int>{new_r, r - q * new_r};
  }
  return ((t % m) + m) % m;
}

}  // namespace

TelescopicAnalysis analyze_telescopic(const std::vector<Int>& gens) {
  if (gens.empty()) throw EmptyGeneratorsError();
  for (Int a : gens)
    if (a < 1) throw ZeroGeneratorError();
  TelescopicAnalysis out;
  out.generators = gens;
  out.d = gcd_chain(gens);
  if (out.d.back() != 1) throw NonCoprimeGeneratorsError(out.d.back());
  out.telescopic = true;
  for (std::size_t j = 1; j < gens.size() && out.telescopic; ++j) {
    std::vector<Int> scaled;
    scaled.reserve(j);
    for (std::size_t i = 0; i < j; ++i) scaled.push_back(gens[i] / out.d[j - 1]);
    auto quotient = NumericalSemigroup::from_generators(std::move(scaled));
    if (!quotient.contains(gens[j] / out.d[j])) {
      out.telescopic = false;
      out.failed_index = static_cast<Int>(j);
    }
  }
  if (out.telescopic)
    out.closed_form_genus = (closed_form_frobenius(gens, out.d) + 1) / 2;
  return out;
}

Int telescopic_genus(const std::vector<Int>& gens) {
  auto a = analyze_telescopic(gens);
  if (!a.telescopic) throw NotTelescopicError();
  return *a.closed_form_genus;
}

std::vector<Int> telescopic_representation(const std::vector<Int>& gens,
                                           Int lambda) {
  auto a = analyze_telescopic(gens);
  if (!a.telescopic) throw NotTelescopicError();
  if (lambda < 0 || !NumericalSemigroup::from_generators(gens).contains(lambda))
    throw NotAnElementError(lambda);
  std::vector<Int> x(gens.size(), 0);
  Int rest = lambda;
  // Peel from the back: modulo d_{j-1} only the a_j term is visible, and
  // a_j/d_j is invertible mod d_{j-1}/d_j, which pins x_j in [0, d_{j-1}/d_j).
  for (std::size_t j = gens.size(); j-- > 1;) {
    const Int ratio = a.d[j - 1] / a.d[j];
    if (ratio == 1) continue;
    const Int inv = mod_inverse(gens[j] / a.d[j], ratio);
    const Int xj = ((rest / a.d[j]) % ratio * inv) % ratio;
    x[j] = xj;
    rest -= checked_mul(xj, gens[j]);
  }
  x[0] = rest / gens[0];
  return x;
}

std::optional<std::vector<Int>> find_telescopic_order(std::vector<Int> gens) {
  if (gens.size() > 8) return std::nullopt;
  std::sort(gens.begin(), gens.end());
  do {
    auto a = analyze_telescopic(gens);
    if (a.telescopic) return gens;
  } while (std::next_permutation(gens.begin(), gens.end()));
  return std::nullopt;
}

std::vector<TelescopicLevelReport> telescopic_tower_diagnostic(
    const std::vector<std::pair<std::vector<Int>, Int>>& levels) {
  std::vector<TelescopicLevelReport> out;
  for (const auto& [gens, q] : levels) {
    auto a = analyze_telescopic(gens);
    if (!a.telescopic) throw NotTelescopicError();
    auto s = NumericalSemigroup::from_generators(gens);
    if (s.genus() == 0) throw DegenerateLevelError();
    TelescopicLevelReport rep;
    rep.generators = gens;
    auto minimal = s.minimal_generators();
    auto order = find_telescopic_order(minimal);
    rep.m = order ? static_cast<Int>(minimal.size())
                  : static_cast<Int>(gens.size());
    rep.lambda1 = s.multiplicity();
    rep.genus = s.genus();
    rep.lewittes = lewittes_bound(s, q);
    rep.ratio = Rational(rep.lewittes, rep.genus);
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace nsemi
