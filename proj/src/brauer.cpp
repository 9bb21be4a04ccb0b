#include "schurw/brauer.hpp"

#include <algorithm>
#include <stdexcept>

#include "schurw/elim.hpp"
#include "schurw/errors.hpp"
#include "schurw/exact.hpp"
#include "schurw/fp.hpp"

namespace schurw::brauer {

bool BrauerDiagram::is_permutation() const {
  for (int t = 0; t < r; ++t)
    if (partner[static_cast<size_t>(t)] < r) return false;
  return true;
}

Permutation BrauerDiagram::to_permutation() const {
  if (!is_permutation()) throw std::logic_error("diagram has cups");
  std::vector<uint8_t> img(static_cast<size_t>(r));
  for (int b = 0; b < r; ++b)
    img[static_cast<size_t>(b)] = static_cast<uint8_t>(partner[static_cast<size_t>(r + b)]);
  return Permutation(std::move(img));
}

std::string BrauerDiagram::str() const {
  auto name = [&](int v) {
    return v < r ? std::to_string(v + 1) : std::to_string(v - r + 1) + "'";
  };
  std::string out;
  for (int v = 0; v < 2 * r; ++v) {
    int u = partner[static_cast<size_t>(v)];
    if (u < v) continue;
    out += "(" + name(v) + "," + name(u) + ")";
  }
  return out;
}

std::vector<BrauerDiagram> enumerate_diagrams(int r) {
  if (r < 1 || r > 6) throw SizeLimitError("strand count out of range");
  std::vector<BrauerDiagram> out;
  BrauerDiagram d;
  d.r = r;
  d.partner.assign(static_cast<size_t>(2 * r), -1);
  auto rec = [&](auto&& self) -> void {
    int v = 0;
    while (v < 2 * r && d.partner[static_cast<size_t>(v)] >= 0) ++v;
    if (v == 2 * r) {
      out.push_back(d);
      return;
    }
    for (int u = v + 1; u < 2 * r; ++u) {
      if (d.partner[static_cast<size_t>(u)] >= 0) continue;
      d.partner[static_cast<size_t>(v)] = u;
      d.partner[static_cast<size_t>(u)] = v;
      self(self);
      d.partner[static_cast<size_t>(v)] = -1;
      d.partner[static_cast<size_t>(u)] = -1;
    }
  };
  rec(rec);
  return out;
}

BrauerDiagram identity_diagram(int r) {
  BrauerDiagram d;
  d.r = r;
  d.partner.resize(static_cast<size_t>(2 * r));
  for (int i = 0; i < r; ++i) {
    d.partner[static_cast<size_t>(i)] = r + i;
    d.partner[static_cast<size_t>(r + i)] = i;
  }
  return d;
}

BrauerDiagram perm_diagram(const Permutation& s) {
  int r = s.degree();
  BrauerDiagram d;
  d.r = r;
  d.partner.resize(static_cast<size_t>(2 * r));
  for (int b = 0; b < r; ++b) {
    d.partner[static_cast<size_t>(r + b)] = s(b);
    d.partner[static_cast<size_t>(s(b))] = r + b;
  }
  return d;
}

BrauerDiagram cup_cap_diagram(int r, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= r || j >= r) throw std::invalid_argument("bad strand pair");
  BrauerDiagram d = identity_diagram(r);
  d.partner[static_cast<size_t>(i)] = j;
  d.partner[static_cast<size_t>(j)] = i;
  d.partner[static_cast<size_t>(r + i)] = r + j;
  d.partner[static_cast<size_t>(r + j)] = r + i;
  return d;
}

std::pair<BrauerDiagram, int> multiply_count(const BrauerDiagram& a, const BrauerDiagram& b) {
  if (a.r != b.r) throw std::invalid_argument("strand count mismatch");
  int r = a.r;
  // layered nodes: final top = a top, middle = a bottom glued to b top,
  // final bottom = b bottom
  auto a_step = [&](int v) { return a.partner[static_cast<size_t>(v)]; };
  auto b_step = [&](int v) { return b.partner[static_cast<size_t>(v)]; };

  BrauerDiagram out;
  out.r = r;
  out.partner.assign(static_cast<size_t>(2 * r), -1);
  std::vector<char> mid_seen(static_cast<size_t>(r), 0);

  // walk from an endpoint: nodes encoded as (layer, idx); layer a-top = final
  // top idx, layer b-bottom = final bottom idx
  auto trace = [&](int start_top, bool from_a) {
    // from_a: start at a-top node start_top; else at b-bottom node
    int idx = start_top;
    bool in_a = from_a;
    int cur = from_a ? a_step(idx) : b_step(r + idx);
    for (;;) {
      if (in_a) {
        if (cur < r) return std::pair<int, int>{cur, 0};  // landed on a top
        int mid = cur - r;
        mid_seen[static_cast<size_t>(mid)] = 1;
        in_a = false;
        cur = b_step(mid);
      } else {
        if (cur >= r) return std::pair<int, int>{cur - r, 1};  // landed on b bottom
        int mid = cur;
        mid_seen[static_cast<size_t>(mid)] = 1;
        in_a = true;
        cur = a_step(r + mid);
      }
    }
  };

  for (int t = 0; t < r; ++t) {
    if (out.partner[static_cast<size_t>(t)] >= 0) continue;
    auto [v, layer] = trace(t, true);
    int node = layer == 0 ? v : r + v;
    out.partner[static_cast<size_t>(t)] = node;
    out.partner[static_cast<size_t>(node)] = t;
  }
  for (int bnode = 0; bnode < r; ++bnode) {
    if (out.partner[static_cast<size_t>(r + bnode)] >= 0) continue;
    auto [v, layer] = trace(bnode, false);
    int node = layer == 0 ? v : r + v;
    out.partner[static_cast<size_t>(r + bnode)] = node;
    out.partner[static_cast<size_t>(node)] = r + bnode;
  }

  // remaining middle edges form closed loops
  int loops = 0;
  for (int mstart = 0; mstart < r; ++mstart) {
    if (mid_seen[static_cast<size_t>(mstart)]) continue;
    loops++;
    int mid = mstart;
    bool via_a = true;  // alternate a-bottom edge, b-top edge
    for (;;) {
      mid_seen[static_cast<size_t>(mid)] = 1;
      int nxt = via_a ? a_step(r + mid) : b_step(mid);
      // stays within the middle layer on a closed loop
      int nmid = via_a ? nxt - r : nxt;
      via_a = !via_a;
      if (nmid == mstart && via_a == true) break;
      mid = nmid;
    }
  }
  return {out, loops};
}

std::pair<BrauerDiagram, Int> multiply(const BrauerDiagram& a, const BrauerDiagram& b,
                                       const Int& delta) {
  auto [d, loops] = multiply_count(a, b);
  Int coeff = 1;
  for (int i = 0; i < loops; ++i) coeff *= delta;
  return {d, coeff};
}

int form_pairing(const FormedSuperspace& w, int a, int b) {
  bool aodd = a >= w.m, bodd = b >= w.m;
  if (aodd != bodd) return 0;
  if (!aodd) {
    if (w.hyperbolic_even) return (a / 2 == b / 2 && a != b) ? 1 : 0;
    return a == b ? 1 : 0;
  }
  int ai = a - w.m, bi = b - w.m;
  if (ai / 2 != bi / 2) return 0;
  if (ai == bi) return 0;
  return ai % 2 == 0 ? 1 : -1;  // <f_1, f_2> = 1 = -<f_2, f_1> per pair
}

std::vector<std::tuple<int, int, int>> coform(const FormedSuperspace& w) {
  std::vector<std::tuple<int, int, int>> out;
  if (w.hyperbolic_even) {
    if (w.m % 2 != 0) throw std::invalid_argument("split form needs even dimension");
    for (int i = 0; i + 1 < w.m; i += 2) {
      out.push_back({i, i + 1, 1});
      out.push_back({i + 1, i, 1});
    }
  } else {
    for (int i = 0; i < w.m; ++i) out.push_back({i, i, 1});
  }
  for (int a = 0; a < w.n; ++a) {
    out.push_back({w.m + 2 * a + 1, w.m + 2 * a, 1});
    out.push_back({w.m + 2 * a, w.m + 2 * a + 1, -1});
  }
  return out;
}

namespace {

struct DiagramGeometry {
  std::vector<std::pair<int, int>> through;  // (top, bottom)
  std::vector<std::pair<int, int>> cups;     // bottom pairs, i < j
  std::vector<std::pair<int, int>> caps;     // top pairs, i < j
  // chords indexed [through..., cups..., caps...]; crossing pairs by index
  std::vector<std::pair<int, int>> crossings;
};

// circle position: top i at i, bottom i at 2r-1-i
DiagramGeometry analyze(const BrauerDiagram& d) {
  DiagramGeometry g;
  int r = d.r;
  std::vector<std::pair<int, int>> chord_pos;
  auto circ = [&](int node) { return node < r ? node : 2 * r - 1 - (node - r); };
  for (int v = 0; v < 2 * r; ++v) {
    int u = d.partner[static_cast<size_t>(v)];
    if (u < v) continue;
    if (v < r && u >= r)
      g.through.push_back({v, u - r});
    else if (v >= r)
      g.cups.push_back({v - r, u - r});
    else
      g.caps.push_back({v, u});
    int p1 = circ(v), p2 = circ(u);
    chord_pos.push_back({std::min(p1, p2), std::max(p1, p2)});
  }
  // chords were appended per matching pair in node order; rebuild in the
  // through/cups/caps order used for parity lookup
  std::vector<std::pair<int, int>> ordered;
  for (const auto& [t, b] : g.through) ordered.push_back({std::min(circ(t), circ(r + b)), std::max(circ(t), circ(r + b))});
  for (const auto& [i, j] : g.cups) ordered.push_back({std::min(circ(r + i), circ(r + j)), std::max(circ(r + i), circ(r + j))});
  for (const auto& [i, j] : g.caps) ordered.push_back({std::min(circ(i), circ(j)), std::max(circ(i), circ(j))});
  for (size_t x = 0; x < ordered.size(); ++x)
    for (size_t y = x + 1; y < ordered.size(); ++y) {
      auto [a1, b1] = ordered[x];
      auto [a2, b2] = ordered[y];
      bool cross = (a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1);
      if (cross) g.crossings.push_back({static_cast<int>(x), static_cast<int>(y)});
    }
  return g;
}

int64_t int_pow_checked(int64_t b, int e, int64_t limit) {
  int64_t v = 1;
  for (int i = 0; i < e; ++i) {
    v *= b;
    if (v > limit) throw SizeLimitError("word space too large");
  }
  return v;
}

}  // namespace

SparseIntMatrix diagram_action_int(const BrauerDiagram& d, const FormedSuperspace& w) {
  int r = d.r, dim = w.dim();
  int64_t nw = int_pow_checked(dim, r, 1 << 20);
  DiagramGeometry g = analyze(d);
  size_t nth = g.through.size(), ncup = g.cups.size();
  auto cof = coform(w);

  SparseIntMatrix out = SparseIntMatrix::zero(nw, nw);
  std::vector<uint8_t> v(static_cast<size_t>(r), 0), u(static_cast<size_t>(r), 0);
  std::vector<int> parity(nth + ncup + g.caps.size());
  for (int64_t vi = 0;; ++vi) {
    int base_coeff = 1;
    for (size_t c = 0; c < ncup; ++c) {
      auto [i, j] = g.cups[c];
      int f = form_pairing(w, v[static_cast<size_t>(i)], v[static_cast<size_t>(j)]);
      if (f == 0) {
        base_coeff = 0;
        break;
      }
      base_coeff *= f;
      parity[nth + c] = v[static_cast<size_t>(i)] >= w.m ? 1 : 0;
    }
    if (base_coeff != 0) {
      for (size_t t = 0; t < nth; ++t) {
        auto [top, bot] = g.through[t];
        u[static_cast<size_t>(top)] = v[static_cast<size_t>(bot)];
        parity[t] = v[static_cast<size_t>(bot)] >= w.m ? 1 : 0;
      }
      // assign a coform term to every cap
      size_t ncap = g.caps.size();
      std::vector<size_t> choice(ncap, 0);
      for (;;) {
        int coeff = base_coeff;
        for (size_t c = 0; c < ncap; ++c) {
          auto [x, y, cv] = cof[choice[c]];
          auto [i, j] = g.caps[c];
          u[static_cast<size_t>(i)] = static_cast<uint8_t>(x);
          u[static_cast<size_t>(j)] = static_cast<uint8_t>(y);
          coeff *= cv;
          parity[nth + ncup + c] = x >= w.m ? 1 : 0;
        }
        for (const auto& [x, y] : g.crossings)
          if (parity[static_cast<size_t>(x)] && parity[static_cast<size_t>(y)]) coeff = -coeff;
        int64_t ui = 0;
        for (int i = 0; i < r; ++i) ui = ui * dim + u[static_cast<size_t>(i)];
        out.rows[static_cast<size_t>(ui)].push_back({static_cast<int32_t>(vi), Int(coeff)});
        // next cap assignment
        size_t c = 0;
        while (c < ncap && ++choice[c] == cof.size()) choice[c++] = 0;
        if (c == ncap) break;
        if (ncap == 0) break;
      }
    }
    int i = r - 1;
    while (i >= 0) {
      if (++v[static_cast<size_t>(i)] < dim) break;
      v[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
  }
  for (auto& row : out.rows) std::sort(row.begin(), row.end(),
                                       [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

SparseIntMatrix brauer_action_matrix_int(int r, const FormedSuperspace& w) {
  int64_t nw = int_pow_checked(w.dim(), r, 1 << 12);
  std::vector<BrauerDiagram> diags = enumerate_diagrams(r);
  SparseIntMatrix out = SparseIntMatrix::zero(static_cast<int64_t>(diags.size()), nw * nw);
  for (size_t di = 0; di < diags.size(); ++di) {
    SparseIntMatrix act = diagram_action_int(diags[di], w);
    for (int64_t u = 0; u < act.nrows; ++u)
      for (const auto& [vi, val] : act.rows[static_cast<size_t>(u)])
        out.rows[di].push_back({static_cast<int32_t>(u * nw + vi), val});
    std::sort(out.rows[di].begin(), out.rows[di].end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return out;
}

int64_t brauer_kernel_dim(int r, int m, int n, uint32_t p) {
  FormedSuperspace w{m, n, p == 2 && m > 0 && m % 2 == 0};
  SparseIntMatrix mat = brauer_action_matrix_int(r, w);
  exact::Limits lim;
  lim.max_rank_rows = mat.nrows + 1;
  lim.max_rank_cols = mat.ncols + 1;
  int64_t rank;
  if (p == 0)
    rank = exact::rank_char0(mat, lim);
  else
    rank = exact::rank_mod_p(mat, p, lim);
  return mat.nrows - rank;
}

O2Result o2_char2_check() {
  const int r = 2;
  FormedSuperspace w{2, 0, true};
  const int dim = 2;
  const int64_t nw = 4;  // words over {x, y} of length 2

  // torus weight of a word: +1 per x letter, -1 per y
  auto weight = [&](int64_t word) {
    int s = 0;
    for (int i = 0, t = static_cast<int>(word); i < r; ++i, t /= dim) s += t % dim == 0 ? 1 : -1;
    return s;
  };
  auto flip = [&](int64_t word) {  // x <-> y in every slot
    int64_t out = 0;
    for (int i = 0, t = static_cast<int>(word); i < r; ++i, t /= dim)
      out += static_cast<int64_t>(1 - t % dim) * (i == 0 ? 1 : dim);
    return out;
  };

  // orbit basis of the invariant endomorphism lattice
  std::vector<int64_t> orbit_of(static_cast<size_t>(nw * nw), -1);
  std::vector<std::vector<int64_t>> orbits;
  for (int64_t a = 0; a < nw; ++a)
    for (int64_t b = 0; b < nw; ++b) {
      if (weight(a) != weight(b)) continue;
      int64_t c = a * nw + b;
      if (orbit_of[static_cast<size_t>(c)] >= 0) continue;
      int64_t c2 = flip(a) * nw + flip(b);
      orbit_of[static_cast<size_t>(c)] = static_cast<int64_t>(orbits.size());
      orbit_of[static_cast<size_t>(c2)] = static_cast<int64_t>(orbits.size());
      if (c == c2)
        orbits.push_back({c});
      else
        orbits.push_back({c, c2});
    }
  int64_t inv_dim = static_cast<int64_t>(orbits.size());

  // diagram images, expressed in orbit coordinates
  std::vector<BrauerDiagram> diags = enumerate_diagrams(r);
  SparseIntMatrix coeffs = SparseIntMatrix::zero(static_cast<int64_t>(diags.size()), inv_dim);
  for (size_t di = 0; di < diags.size(); ++di) {
    SparseIntMatrix act = diagram_action_int(diags[di], w);
    std::vector<Int> flat(static_cast<size_t>(nw * nw), Int(0));
    for (int64_t u = 0; u < nw; ++u)
      for (const auto& [vi, val] : act.rows[static_cast<size_t>(u)])
        flat[static_cast<size_t>(u * nw + vi)] = val;
    for (int64_t c = 0; c < nw * nw; ++c) {
      if (flat[static_cast<size_t>(c)] == 0) continue;
      if (orbit_of[static_cast<size_t>(c)] < 0)
        throw std::logic_error("diagram image breaks the torus symmetry");
    }
    for (int64_t oi = 0; oi < inv_dim; ++oi) {
      const auto& orb = orbits[static_cast<size_t>(oi)];
      const Int& v0 = flat[static_cast<size_t>(orb[0])];
      for (int64_t c : orb)
        if (flat[static_cast<size_t>(c)] != v0)
          throw std::logic_error("diagram image breaks the flip symmetry");
      if (v0 != 0) coeffs.set(static_cast<int64_t>(di), oi, v0);
    }
  }

  O2Result res;
  int64_t rank2 = exact::rank_mod_p(coeffs, 2);
  res.kernel_dim = coeffs.nrows - rank2;
  res.cokernel_dim = inv_dim - rank2;

  exact::LatticeBasis image = exact::hnf_row_basis(coeffs);
  exact::LatticeBasis saturated = exact::p_saturate(image, 2);
  SparseIntMatrix full = SparseIntMatrix::zero(inv_dim, inv_dim);
  for (int64_t i = 0; i < inv_dim; ++i) full.set(i, i, 1);
  res.saturated_iso = saturated == exact::hnf_row_basis(full);
  return res;
}

}  // namespace schurw::brauer
