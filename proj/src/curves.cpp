#include "braid/curves.hpp"

#include <algorithm>
#include <stdexcept>

#include "braid/check.hpp"

namespace braid {

namespace {

long pos_part(long x) { return x > 0 ? x : 0; }

// Per-slab piece counts in normal position: through strands above/below the
// puncture, and loops attached to the left/right bounding line.
struct Slab {
  long u = 0, d = 0, lam = 0, rho = 0;
};

Slab slab_counts(const Lamination& l, int s) {  // slab around puncture s, 1-based
  const int m = l.degree;
  long el = s >= 2 ? l.cross[s - 2] : 0;
  long er = s <= m - 1 ? l.cross[s - 1] : 0;
  Slab out;
  out.lam = pos_part((el - er) / 2);
  out.rho = pos_part((er - el) / 2);
  long through = std::min(el, er);
  long a = (s >= 2 && s <= m - 1) ? l.split[s - 2] : 0;
  out.u = through / 2 + a;
  out.d = through / 2 - a;
  return out;
}

// Axis-crossing zones inside the window of sigma_i: west of the left
// puncture (L), the gap between the punctures (G), east of the right
// puncture (R).
enum Zone : int { ZL = 0, ZG = 1, ZR = 2 };

using Zones = std::vector<int>;

void push_cancel(Zones& zs, int z) {
  if (!zs.empty() && zs.back() == z)
    zs.pop_back();
  else
    zs.push_back(z);
}

// F2 letters: +1 = p (loop around the left puncture), +2 = q (right).
using F2 = std::vector<int>;

void push_f2(F2& w, int g) {
  if (!w.empty() && w.back() == -g)
    w.pop_back();
  else
    w.push_back(g);
}

// Translate a based loop's reduced zone word into F2.  The loop starts and
// ends above the axis, so crossings pair up into below-axis excursions;
// travel above the axis is free.
F2 zones_to_f2(const Zones& zs) {
  BRAID_CHECK(zs.size() % 2 == 0, "loop zone word must have even length");
  F2 out;
  for (std::size_t t = 0; t + 1 < zs.size(); t += 2) {
    int a = zs[t], b = zs[t + 1];
    if (a == b) continue;
    if (a == ZL && b == ZG) push_f2(out, 1);
    else if (a == ZG && b == ZR) push_f2(out, 2);
    else if (a == ZL && b == ZR) { push_f2(out, 1); push_f2(out, 2); }
    else if (a == ZG && b == ZL) push_f2(out, -1);
    else if (a == ZR && b == ZG) push_f2(out, -2);
    else { push_f2(out, -2); push_f2(out, -1); }  // (R, L)
  }
  return out;
}

Zones f2_to_zones(const F2& w) {
  Zones out;
  for (int g : w) {
    switch (g) {
      case 1: push_cancel(out, ZL); push_cancel(out, ZG); break;
      case 2: push_cancel(out, ZG); push_cancel(out, ZR); break;
      case -1: push_cancel(out, ZG); push_cancel(out, ZL); break;
      default: push_cancel(out, ZR); push_cancel(out, ZG); break;
    }
  }
  return out;
}

// Half twist of the window punctures: positive sends p -> p q p^-1, q -> p.
F2 twist_f2(const F2& w, int sign) {
  F2 out;
  for (int g : w) {
    if (sign > 0) {
      switch (g) {
        case 1: push_f2(out, 1); push_f2(out, 2); push_f2(out, -1); break;
        case -1: push_f2(out, 1); push_f2(out, -2); push_f2(out, -1); break;
        case 2: push_f2(out, 1); break;
        default: push_f2(out, -1); break;
      }
    } else {
      switch (g) {
        case 1: push_f2(out, 2); break;
        case -1: push_f2(out, -2); break;
        case 2: push_f2(out, -2); push_f2(out, 1); push_f2(out, 2); break;
        default: push_f2(out, -2); push_f2(out, -1); push_f2(out, 2); break;
      }
    }
  }
  return out;
}

struct Chain {
  bool entry_left = true;   // which wall the chain starts on
  bool entry_above = true;  // level at the entry crossing
  bool exit_left = true;
  bool exit_above = true;
  Zones zones;
};

struct WindowCounts {
  long uL = 0, dL = 0, lamL = 0, rhoL = 0;
  long uR = 0, dR = 0, lamR = 0, rhoR = 0;
  long mid = 0;  // crossings of the middle line
};

// Connector from the basepoint (above the axis, mid-top) to a wall entry.
// Reaching a below-axis entry crosses the axis once next to that wall.
Zones gamma(bool left, bool above) {
  if (above) return {};
  return {left ? ZL : ZR};
}

// Re-derive normal-position piece counts of one chain from its reduced zone
// word.  Local coordinates per slab place the puncture at 1.5: left slab
// wall=0, west crossing=1, gap crossing=2, middle line=3; right slab
// middle=0, gap=1, east=2, wall=3.  A piece passes its puncture once per
// adjacent item pair straddling 1.5.
void recount_chain(const Chain& c, WindowCounts& wc) {
  struct Item {
    int side;   // 0 left slab, 1 right slab
    double pos;
    bool letter;
  };
  std::vector<Item> items;
  items.push_back({c.entry_left ? 0 : 1, 0.0, false});
  for (int z : c.zones) {
    int side = z == ZL ? 0 : (z == ZR ? 1 : -1);
    items.push_back({side, 0.0, true});
  }
  items.push_back({c.exit_left ? 0 : 1, 0.0, false});
  for (std::size_t t = 1; t < items.size(); ++t)
    if (items[t].side == -1) items[t].side = items[t - 1].side;  // gap letters attach backward
  for (std::size_t t = 0; t < items.size(); ++t) {
    const bool left = items[t].side == 0;
    if (t == 0 || t + 1 == items.size()) {
      items[t].pos = left ? 0 : 3;
    } else {
      int z = c.zones[t - 1];
      if (z == ZL) items[t].pos = 1;
      else if (z == ZR) items[t].pos = 2;
      else items[t].pos = left ? 2 : 1;
    }
  }

  bool level = c.entry_above;
  bool seg_from_wall = true;
  int passages = 0;
  bool first_pass_level = false;
  double prev_pos = items[0].pos;

  auto note_passage = [&](double a, double b) {
    if ((a < 1.5) != (b < 1.5)) {
      if (passages == 0) first_pass_level = level;
      ++passages;
    }
  };
  auto close_segment = [&](bool to_wall, int side) {
    if (seg_from_wall && to_wall) {
      BRAID_CHECK(passages == 2, "wall-to-wall piece must wrap once");
      if (side == 0) ++wc.lamL; else ++wc.rhoR;
    } else if (!seg_from_wall && !to_wall) {
      BRAID_CHECK(passages == 2, "middle-to-middle piece must wrap once");
      if (side == 0) ++wc.rhoL; else ++wc.lamR;
    } else {
      BRAID_CHECK(passages == 1, "through piece must pass its puncture once");
      if (side == 0) (first_pass_level ? wc.uL : wc.dL) += 1;
      else (first_pass_level ? wc.uR : wc.dR) += 1;
    }
  };

  for (std::size_t t = 1; t < items.size(); ++t) {
    if (items[t].side != items[t - 1].side) {
      double cut_old = items[t - 1].side == 0 ? 3 : 0;
      note_passage(prev_pos, cut_old);
      close_segment(false, items[t - 1].side);
      ++wc.mid;
      seg_from_wall = false;
      passages = 0;
      prev_pos = items[t].side == 0 ? 3 : 0;
    }
    note_passage(prev_pos, items[t].pos);
    if (items[t].letter) level = !level;
    prev_pos = items[t].pos;
  }
  close_segment(true, items.back().side);
  BRAID_CHECK(level == c.exit_above, "exit level mismatch after recount");
}

Chain transform_chain(const Chain& c, int sign) {
  Zones loop;
  for (int z : gamma(c.entry_left, c.entry_above)) push_cancel(loop, z);
  for (int z : c.zones) push_cancel(loop, z);
  Zones gx = gamma(c.exit_left, c.exit_above);
  for (auto it = gx.rbegin(); it != gx.rend(); ++it) push_cancel(loop, *it);
  F2 f = zones_to_f2(loop);
  F2 tf = twist_f2(f, sign);
  Zones img = f2_to_zones(tf);
  Zones out;
  for (int z : gamma(c.entry_left, c.entry_above)) push_cancel(out, z);
  for (int z : img) push_cancel(out, z);
  for (int z : gx) push_cancel(out, z);
  Chain res = c;
  res.zones = std::move(out);
  return res;
}

}  // namespace

Lamination Lamination::round_block(int m, int i, int j) {
  if (m < 2 || i < 1 || j <= i || j > m)
    throw std::invalid_argument("round_block needs 1 <= i < j <= m");
  Lamination l = Lamination::empty(m);
  for (int k = i; k <= j - 1; ++k) l.cross[k - 1] = 2;
  return l;
}

bool Lamination::is_zero() const {
  for (long e : cross)
    if (e) return false;
  return true;
}

bool Lamination::valid() const {
  if (static_cast<int>(cross.size()) != degree - 1) return false;
  if (static_cast<int>(split.size()) != degree - 2) return false;
  for (long e : cross)
    if (e < 0 || e % 2 != 0) return false;
  for (int s = 2; s <= degree - 1; ++s) {
    long el = cross[s - 2], er = cross[s - 1];
    if (std::labs(2 * split[s - 2]) > std::min(el, er)) return false;
  }
  return true;
}

Lamination Lamination::disjoint_union(const Lamination& other) const {
  if (degree != other.degree) throw std::invalid_argument("degree mismatch");
  Lamination out = *this;
  for (std::size_t k = 0; k < cross.size(); ++k) out.cross[k] += other.cross[k];
  for (std::size_t k = 0; k < split.size(); ++k) out.split[k] += other.split[k];
  return out;
}

std::string Lamination::serialize() const {
  std::string s = "E[";
  for (std::size_t k = 0; k < cross.size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(cross[k]);
  }
  s += "] a[";
  for (std::size_t k = 0; k < split.size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(split[k]);
  }
  s += ']';
  return s;
}

Lamination act_generator(const Lamination& lam, int index, int sign) {
  const int m = lam.degree;
  if (index < 1 || index >= m) throw std::invalid_argument("generator index out of range");
  if (!lam.valid()) throw std::invalid_argument("invalid lamination coordinates");

  const Slab L = slab_counts(lam, index);
  const Slab R = slab_counts(lam, index + 1);
  const long h = lam.cross[index - 1];
  BRAID_CHECK(L.u + L.d + 2 * L.rho == h, "left slab inconsistent with middle line");
  BRAID_CHECK(R.u + R.d + 2 * R.lam == h, "right slab inconsistent with middle line");

  // middle-line crossing points classified top to bottom
  auto left_kind = [&](long p) {  // 0 through-above, 1 loop-upper, 2 loop-lower, 3 through-below
    if (p < L.u) return 0;
    if (p < L.u + L.rho) return 1;
    if (p < L.u + 2 * L.rho) return 2;
    return 3;
  };
  auto right_kind = [&](long p) {
    if (p < R.u) return 0;
    if (p < R.u + R.lam) return 1;
    if (p < R.u + 2 * R.lam) return 2;
    return 3;
  };
  auto left_partner = [&](long p) { return 2 * L.u + 2 * L.rho - 1 - p; };
  auto right_partner = [&](long p) { return 2 * R.u + 2 * R.lam - 1 - p; };
  auto left_above = [&](long p) { return p < L.u + L.rho; };
  auto right_above = [&](long p) { return p < R.u + R.lam; };

  WindowCounts out;
  std::vector<bool> visited(static_cast<std::size_t>(h), false);

  auto walk_open = [&](long start, bool from_left) {
    Chain c;
    c.entry_left = from_left;
    c.entry_above = from_left ? left_above(start) : right_above(start);
    long p = start;
    bool heading_right = from_left;
    while (true) {
      visited[static_cast<std::size_t>(p)] = true;
      if (left_above(p) != right_above(p)) push_cancel(c.zones, ZG);
      if (heading_right) {
        int rk = right_kind(p);
        if (rk == 0 || rk == 3) {
          c.exit_left = false;
          c.exit_above = right_above(p);
          break;
        }
        push_cancel(c.zones, ZR);
        p = right_partner(p);
        heading_right = false;
      } else {
        int lk = left_kind(p);
        if (lk == 0 || lk == 3) {
          c.exit_left = true;
          c.exit_above = left_above(p);
          break;
        }
        push_cancel(c.zones, ZL);
        p = left_partner(p);
        heading_right = true;
      }
    }
    recount_chain(transform_chain(c, sign), out);
  };

  for (long p = 0; p < h; ++p) {
    int lk = left_kind(p);
    if (!visited[static_cast<std::size_t>(p)] && (lk == 0 || lk == 3)) walk_open(p, true);
  }
  for (long p = 0; p < h; ++p) {
    int rk = right_kind(p);
    if (!visited[static_cast<std::size_t>(p)] && (rk == 0 || rk == 3)) walk_open(p, false);
  }
  // remaining cycles are curves around both window punctures, fixed by the
  // twist
  for (long p = 0; p < h; ++p) {
    if (visited[static_cast<std::size_t>(p)]) continue;
    long down = right_partner(p);
    long back = left_partner(down);
    BRAID_CHECK(back == p, "closed window component must be a simple wrap");
    visited[static_cast<std::size_t>(p)] = true;
    visited[static_cast<std::size_t>(down)] = true;
    out.rhoL += 1;
    out.lamR += 1;
    out.mid += 2;
  }
  // loops hanging on the outer walls wrap one window puncture and transform
  for (long t = 0; t < L.lam; ++t)
    recount_chain(transform_chain(Chain{true, true, true, false, {ZG}}, sign), out);
  for (long t = 0; t < R.rho; ++t)
    recount_chain(transform_chain(Chain{false, true, false, false, {ZG}}, sign), out);

  BRAID_CHECK(out.lamL == 0 || out.rhoL == 0, "left slab has loops on both sides");
  BRAID_CHECK(out.lamR == 0 || out.rhoR == 0, "right slab has loops on both sides");
  BRAID_CHECK(out.uL + out.dL + 2 * out.lamL == (index >= 2 ? lam.cross[index - 2] : 0),
              "outer left crossing count changed");
  BRAID_CHECK(out.uR + out.dR + 2 * out.rhoR == (index + 1 <= m - 1 ? lam.cross[index] : 0),
              "outer right crossing count changed");
  BRAID_CHECK(out.uL + out.dL + 2 * out.rhoL == out.mid, "left slab inconsistent after twist");
  BRAID_CHECK(out.uR + out.dR + 2 * out.lamR == out.mid, "right slab inconsistent after twist");

  Lamination res = lam;
  res.cross[index - 1] = out.mid;
  if (index >= 2) res.split[index - 2] = (out.uL - out.dL) / 2;
  if (index + 1 <= m - 1) res.split[index - 1] = (out.uR - out.dR) / 2;
  BRAID_CHECK(res.valid(), "twist produced invalid coordinates");
  return res;
}

Lamination act_on_lamination(const Word& w, const Lamination& lam) {
  if (w.degree() != lam.degree) throw std::invalid_argument("degree mismatch in act_on_lamination");
  Lamination cur = lam;
  for (const Letter& l : w.letters()) cur = act_generator(cur, l.index, l.sign);
  return cur;
}

}  // namespace braid
