#include "braid/nthurston.hpp"

#include <stdexcept>

#include "braid/check.hpp"
#include "braid/garside.hpp"

namespace braid {

RoundCurve::RoundCurve(int degree_, int lo_, int hi_) : degree(degree_), lo(lo_), hi(hi_) {
  if (lo < 1 || hi <= lo || hi > degree)
    throw std::invalid_argument("round curve block out of range");
  if (hi - lo + 1 >= degree)
    throw std::invalid_argument("round curve must not enclose all punctures");
}

bool preserves_round_curve(const Word& w, const RoundCurve& r) {
  if (w.degree() != r.degree) throw std::invalid_argument("degree mismatch");
  Lamination c = r.coords();
  return act_on_lamination(w, c) == c;
}

namespace {

void extend_families(int m, int next_lo, std::vector<std::pair<int, int>>& cur,
                     std::vector<Lamination>& out) {
  if (!cur.empty()) {
    Lamination sum = Lamination::empty(m);
    for (auto [i, j] : cur) sum = sum.disjoint_union(Lamination::round_block(m, i, j));
    out.push_back(sum);
  }
  for (int i = next_lo; i <= m - 1; ++i) {
    for (int j = i + 1; j <= m && j - i + 1 <= m - 1; ++j) {
      cur.emplace_back(i, j);
      extend_families(m, j + 1, cur, out);
      cur.pop_back();
    }
  }
}

}  // namespace

std::vector<Lamination> round_multicurve_coords(int degree) {
  std::vector<Lamination> out;
  std::vector<std::pair<int, int>> cur;
  extend_families(degree, 1, cur, out);
  return out;
}

ClassifyResult classify(const Word& w, const ClassifyOptions& opts) {
  const int m = w.degree();
  if (m > opts.max_degree)
    throw std::invalid_argument("classify: degree exceeds configured bound");
  if (is_periodic(w)) return {NTType::Periodic, ""};

  SssResult sss = super_summit_set(w, opts.sss_cap);
  if (!sss.complete)
    return {std::nullopt, "super summit set exceeded cap (" +
                              std::to_string(sss.visited) + " elements)"};
  const std::vector<Lamination> multicurves = round_multicurve_coords(m);
  for (const GarsideNF& el : sss.elements) {
    Word ew = el.to_word();
    for (const Lamination& mc : multicurves) {
      if (act_on_lamination(ew, mc) == mc) return {NTType::Reducible, ""};
    }
  }
  return {NTType::PseudoAnosov, ""};
}

CurveInvariance invariant_curve_class(const Word& w, const ClassifyOptions& opts) {
  if (w.degree() != 3)
    throw std::invalid_argument("invariant_curve_class implemented for degree 3");
  CurveInvariance out;
  if (central_delta_power(w)) {
    out.central = true;
    out.note = "central: preserves every curve class";
    return out;
  }
  if (is_periodic(w)) {
    out.note = "periodic non-central: preserves no essential curve class";
    return out;
  }
  SssResult sss = super_summit_set(w, opts.sss_cap);
  if (!sss.complete) throw std::runtime_error("invariant_curve_class: super summit cap exceeded");
  for (std::size_t t = 0; t < sss.elements.size(); ++t) {
    Word ew = sss.elements[t].to_word();
    for (int lo = 1; lo <= 2; ++lo) {
      RoundCurve r(3, lo, lo + 1);
      if (preserves_round_curve(ew, r)) {
        // element = c^-1 w c fixes r, so w fixes the image of r under c^-1
        out.curve = act_on_lamination(sss.witnesses[t].inverse(), r.coords());
        return out;
      }
    }
  }
  out.note = "pseudo-Anosov: preserves no essential curve class";
  return out;
}

std::string nt_token(const ClassifyResult& r) {
  if (!r.type) return "inconclusive";
  switch (*r.type) {
    case NTType::Periodic: return "periodic";
    case NTType::Reducible: return "reducible";
    default: return "pA";
  }
}

}  // namespace braid
