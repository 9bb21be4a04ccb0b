#include "schurw/checklist.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "schurw/bounds.hpp"
#include "schurw/brauer.hpp"
#include "schurw/commutant.hpp"
#include "schurw/errors.hpp"
#include "schurw/latticesat.hpp"
#include "schurw/partitions.hpp"
#include "schurw/permutation.hpp"
#include "schurw/superspace.hpp"

namespace schurw::checklist {

bool CriterionReport::pass() const {
  for (const auto& r : rows)
    if (!r.pass) return false;
  return true;
}

std::string CriterionReport::summary() const {
  std::string s = pass() ? "PASS" : "FAIL";
  s += " (" + std::to_string(rows.size()) + " verified";
  if (!skipped.empty()) s += ", " + std::to_string(skipped.size()) + " skipped: size limit";
  s += ")";
  return s;
}

bool ChecklistReport::pass() const {
  for (const auto& c : criteria)
    if (!c.pass()) return false;
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void check(CriterionReport& rep, const std::string& id, const std::string& provenance,
           const std::string& expected, const std::function<std::string()>& compute) {
  CheckRow row;
  row.claim_id = id;
  row.provenance = provenance;
  row.expected = expected;
  auto t0 = Clock::now();
  try {
    row.computed = compute();
  } catch (const std::exception& e) {
    row.computed = std::string("error: ") + e.what();
  }
  row.ms = ms_since(t0);
  row.pass = row.computed == row.expected;
  rep.rows.push_back(std::move(row));
}

std::string mnp(int m, int n, uint32_t p) {
  return "m" + std::to_string(m) + "-n" + std::to_string(n) + "-p" + std::to_string(p);
}

// ---- criterion 1: brute-force injectivity threshold ------------------------

struct ThresholdPoint {
  int m, n;
  uint32_t p;
  bool within_budget;  // brute force at degree r_p+1 fits the time/space budget
};

// p in {3,5}, 1 <= n <= m <= 3.  The four marked points need degrees 9..14,
// where even the blockwise probe path no longer fits the budget.
constexpr ThresholdPoint kThresholdGrid[] = {
    {1, 1, 3, true}, {2, 1, 3, true},  {2, 2, 3, true},
    {3, 1, 3, true}, {3, 2, 3, true},  {3, 3, 3, false},
    {1, 1, 5, true}, {2, 1, 5, true},  {2, 2, 5, false},
    {3, 1, 5, true}, {3, 2, 5, false}, {3, 3, 5, false},
};

CriterionReport criterion1(const ChecklistOptions& opt) {
  CriterionReport rep;
  rep.index = 1;
  rep.title = "injectivity threshold matches brute force";

  struct Named {
    int m, n;
    uint32_t p;
    int64_t val;
  };
  const Named named[] = {{1, 1, 3, 3}, {2, 1, 3, 4}, {2, 1, 5, 5}, {3, 2, 3, 7}};
  for (const auto& q : named)
    check(rep, "threshold-closed-" + mnp(q.m, q.n, q.p), "literature", std::to_string(q.val),
          [&q] { return std::to_string(bounds::r_p_closed(q.m, q.n, q.p)); });

  for (const auto& g : kThresholdGrid) {
    int64_t closed = bounds::r_p_closed(g.m, g.n, g.p);
    if (!g.within_budget && !opt.limit_override) {
      rep.skipped.push_back("(" + mnp(g.m, g.n, g.p) + "): brute force needs degree " +
                            std::to_string(closed + 1) + ", over the size budget");
      continue;
    }
    check(rep, "threshold-brute-" + mnp(g.m, g.n, g.p), "oracle", std::to_string(closed),
          [&g, closed, &opt] {
            superspace::SizeConfig cfg;
            if (opt.limit_override) {
              cfg.max_r_kernel = 14;
              cfg.max_words = 100'000'000;
            }
            return std::to_string(
                superspace::max_faithful_r(g.m, g.n, g.p, static_cast<int>(closed) + 1, cfg));
          });
  }
  return rep;
}

// ---- criterion 2: threshold formula equivalence ----------------------------

CriterionReport criterion2(const ChecklistOptions&) {
  CriterionReport rep;
  rep.index = 2;
  rep.title = "closed threshold equals the block-minimum formula";

  check(rep, "threshold-formula-grid-40", "literature", "match on 4100 points", [] {
    int64_t points = 0;
    for (uint32_t p : {3u, 5u, 7u, 11u, 13u})
      for (int m = 1; m <= 40; ++m)
        for (int n = 1; n <= m; ++n) {
          ++points;
          if (bounds::r_p_closed(m, n, p) != bounds::t_p(m, n, p))
            return "mismatch at " + mnp(m, n, p);
        }
    return "match on " + std::to_string(points) + " points";
  });
  check(rep, "threshold-closed-m7-n7-p5", "literature", "33",
        [] { return std::to_string(bounds::r_p_closed(7, 7, 5)); });
  check(rep, "block-minimum-m7-n7-p5", "literature", "33",
        [] { return std::to_string(bounds::t_p(7, 7, 5)); });
  check(rep, "upper-bound-m7-n7-p5", "literature", "35",
        [] { return std::to_string(bounds::upper_bound(7, 7, 5)); });
  return rep;
}

// ---- criterion 3: one even, one odd letter ---------------------------------

CriterionReport criterion3(const ChecklistOptions&) {
  CriterionReport rep;
  rep.index = 3;
  rep.title = "commutant dimension and surjectivity at one even, one odd letter";

  for (uint32_t p : {3u, 5u})
    for (int r = 2; r <= 6; ++r) {
      std::string suffix = "1-1-r" + std::to_string(r) + "-p" + std::to_string(p);
      std::string expect = std::to_string(bounds::dim_endo_11(r));
      check(rep, "endo-dim-" + suffix, "literature", expect,
            [r, p] { return std::to_string(commutant::endo_dim(1, 1, r, p)); });
      check(rep, "phi-rank-" + suffix, "literature", expect,
            [r, p] { return std::to_string(superspace::phi_rank_mod_p(1, 1, r, p)); });
    }
  return rep;
}

// ---- criterion 4: the defect instance --------------------------------------

CriterionReport criterion4(const ChecklistOptions&) {
  CriterionReport rep;
  rep.index = 4;
  rep.title = "defect instance: two even, one odd letters, degree five, char three";

  check(rep, "endo-dim-2-1-r5-p3", "literature", "120",
        [] { return std::to_string(commutant::endo_dim(2, 1, 5, 3)); });
  check(rep, "phi-rank-2-1-r5-p3", "literature", "119",
        [] { return std::to_string(superspace::phi_rank_mod_p(2, 1, 5, 3)); });
  check(rep, "phi-kernel-dim-2-1-r5-p3", "literature", "1",
        [] { return std::to_string(superspace::phi_kernel_dim(2, 1, 5, 3)); });
  check(rep, "skew-spans-kernel-2-1-r5-p3", "literature", "annihilated and nonzero mod 3", [] {
    auto dec = superspace::weight_blocks(2, 1, 5);
    auto img = superspace::phi_apply_int(dec, superspace::skew_symmetrizer(5));
    for (const Int& v : img)
      if (v % 3 != 0) return std::string("image nonzero mod 3");
    // coefficients are all +-1, so the element itself is nonzero mod 3
    return std::string("annihilated and nonzero mod 3");
  });
  check(rep, "defect-2-1-r5-p3", "literature", "neither injective nor surjective", [] {
    bool inj = superspace::phi_kernel_dim(2, 1, 5, 3) == 0;
    bool surj = superspace::phi_rank_mod_p(2, 1, 5, 3) ==
                static_cast<int64_t>(commutant::endo_dim(2, 1, 5, 3));
    if (!inj && !surj) return std::string("neither injective nor surjective");
    return std::string(inj ? "injective" : "non-injective") + ", " +
           (surj ? "surjective" : "non-surjective");
  });
  return rep;
}

// ---- criterion 5: the saturated image lattice -------------------------------

CriterionReport criterion5(const ChecklistOptions&) {
  CriterionReport rep;
  rep.index = 5;
  rep.title = "saturated image lattice at two even, one odd letters, degree five, char three";

  latticesat::SigmaLattice sig;
  check(rep, "sigma-image-rank-2-1-r5-p3", "literature", "120", [&sig] {
    sig = latticesat::build_sigma(2, 1, 5, 3);
    return std::to_string(sig.image_basis.rank());
  });
  check(rep, "sigma-saturation-index-2-1-r5-p3", "literature", "3^1",
        [&sig] { return "3^" + std::to_string(latticesat::saturation_index_log_p(sig)); });
  check(rep, "skew-divisibility-2-1-r5-p3", "oracle", "1", [] {
    return std::to_string(
        latticesat::divisibility_exponent(2, 1, 5, superspace::skew_symmetrizer(5), 3));
  });
  check(rep, "sigma-generators-2-1-r5-p3", "literature", "true", [&sig] {
    return latticesat::verify_generators(sig, {{superspace::skew_symmetrizer(5), 1}}) ? "true"
                                                                                      : "false";
  });
  check(rep, "reduced-map-iso-2-1-r5-p3", "literature", "true",
        [] { return latticesat::phi_tilde_is_iso(2, 1, 5, 3) ? "true" : "false"; });
  return rep;
}

// ---- criterion 6: partition identity property suites ----------------------------

CriterionReport criterion6(const ChecklistOptions&) {
  CriterionReport rep;
  rep.index = 6;
  rep.title = "partition identity property suites";

  check(rep, "hook-collision-closed-form", "literature", "match on 858 pairs", [] {
    int64_t pairs = 0;
    for (uint32_t p : {3u, 5u, 7u})
      for (int r = 1; r <= 12; ++r)
        for (int i = 1; i < r; ++i)
          for (int j = 0; j < i; ++j) {
            ++pairs;
            bool same = combinatorics::p_regularize(combinatorics::hook(r, i), static_cast<int>(p)) ==
                        combinatorics::p_regularize(combinatorics::hook(r, j), static_cast<int>(p));
            if (same != combinatorics::hook_regularization_collision(r, static_cast<int>(p), i, j))
              return "mismatch at r=" + std::to_string(r) + " p=" + std::to_string(p) +
                     " i=" + std::to_string(i) + " j=" + std::to_string(j);
          }
    return "match on " + std::to_string(pairs) + " pairs";
  });

  // every (p, m, n) with t_p(m,n) <= 25, all partitions of t_p(m,n)
  check(rep, "part-cap-bound-t25", "literature", "no violations", [] {
    for (uint32_t p : {3u, 5u, 7u})
      for (int m = 1; m <= 25; ++m)
        for (int n = 1; n <= m; ++n) {
          int64_t t = bounds::t_p(m, n, p);
          if (t > 25) continue;
          int cap = std::min<int>(static_cast<int>(p) - 1, n);
          for (const auto& lam : combinatorics::enumerate_partitions(static_cast<int>(t)))
            if (static_cast<int>(lam.size()) > m && lam[static_cast<size_t>(m)] > cap)
              return "violation at " + mnp(m, n, p) + " partition " +
                     combinatorics::partition_str(lam);
        }
    return std::string("no violations");
  });

  check(rep, "ladder-sum-bound-t25", "literature", "no violations", [] {
    for (uint32_t p : {3u, 5u, 7u})
      for (int m = 1; m <= 25; ++m)
        for (int n = 1; n <= m; ++n) {
          int64_t t = bounds::t_p(m, n, p);
          if (t > 25) continue;
          for (const auto& lam : combinatorics::enumerate_partitions(static_cast<int>(t))) {
            if (static_cast<int>(lam.size()) <= m) continue;
            auto [a, b] = combinatorics::claim1_sequence(lam, m, static_cast<int>(p));
            int sum = 0;
            for (int x : b) sum += x;
            if (sum > n)
              return "violation at " + mnp(m, n, p) + " partition " +
                     combinatorics::partition_str(lam);
          }
        }
    return std::string("no violations");
  });

  check(rep, "witness-size-and-restriction", "literature", "no violations", [] {
    for (uint32_t p : {3u, 5u, 7u})
      for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= m; ++n)
          for (int s = 1; s <= std::min<int>(static_cast<int>(p) - 1, n + 1); ++s) {
            auto w = combinatorics::witness_partition(m, n, s, static_cast<int>(p));
            int64_t size = 0;
            for (int x : w) size += x;
            if (size != bounds::t_s(m, n, p, s) + 1)
              return "size violation at " + mnp(m, n, p) + " s=" + std::to_string(s);
            if (!combinatorics::is_p_restricted(w, static_cast<int>(p)))
              return "restriction violation at " + mnp(m, n, p) + " s=" + std::to_string(s);
          }
    return std::string("no violations");
  });
  return rep;
}

// ---- criterion 7: diagram algebra -------------------------------------------

CriterionReport criterion7(const ChecklistOptions&) {
  CriterionReport rep;
  rep.index = 7;
  rep.title = "diagram algebra: relations, counts, orthogonal form instance";

  check(rep, "o2-char2-kernel-cokernel", "literature", "kernel 1, cokernel 1, saturation fills",
        [] {
          auto res = brauer::o2_char2_check();
          return "kernel " + std::to_string(res.kernel_dim) + ", cokernel " +
                 std::to_string(res.cokernel_dim) +
                 (res.saturated_iso ? ", saturation fills" : ", saturation gap");
        });

  check(rep, "diagram-relations-r2", "definition", "s*s=1, e*e=delta*e, s*e=e*s=e", [] {
    auto s = brauer::perm_diagram(Permutation::transposition(2, 0, 1));
    auto e = brauer::cup_cap_diagram(2, 0, 1);
    auto id = brauer::identity_diagram(2);
    auto [ss, l1] = brauer::multiply_count(s, s);
    auto [ee, l2] = brauer::multiply_count(e, e);
    auto [se, l3] = brauer::multiply_count(s, e);
    auto [es, l4] = brauer::multiply_count(e, s);
    bool ok = ss == id && l1 == 0 && ee == e && l2 == 1 && se == e && l3 == 0 && es == e && l4 == 0;
    return ok ? std::string("s*s=1, e*e=delta*e, s*e=e*s=e") : std::string("relation failure");
  });

  check(rep, "diagram-counts-r1-4", "definition", "1, 3, 15, 105", [] {
    std::string out;
    for (int r = 1; r <= 4; ++r) {
      if (r > 1) out += ", ";
      out += std::to_string(brauer::enumerate_diagrams(r).size());
    }
    return out;
  });

  check(rep, "perm-diagram-restriction-r2", "oracle", "bit-exact on 4 matrices", [] {
    int matched = 0;
    struct Space {
      int even_letters, odd_pairs;
    };
    for (Space sp : {Space{2, 0}, Space{1, 1}}) {
      brauer::FormedSuperspace w{sp.even_letters, sp.odd_pairs, false};
      int dim = w.dim();
      int64_t nw = static_cast<int64_t>(dim) * dim;
      for (uint64_t sr = 0; sr < 2; ++sr) {
        Permutation s = Permutation::from_rank(2, sr);
        SparseIntMatrix want = SparseIntMatrix::zero(nw, nw);
        for (int64_t vi = 0; vi < nw; ++vi) {
          superspace::Word word = {static_cast<uint8_t>(vi / dim),
                                   static_cast<uint8_t>(vi % dim)};
          auto [u, sgn] = superspace::act(s, word, sp.even_letters);
          int64_t ui = static_cast<int64_t>(u[0]) * dim + u[1];
          want.rows[static_cast<size_t>(ui)].push_back({static_cast<int32_t>(vi), Int(sgn)});
        }
        for (auto& row : want.rows)
          std::sort(row.begin(), row.end(),
                    [](const auto& a, const auto& b) { return a.first < b.first; });
        if (brauer::diagram_action_int(brauer::perm_diagram(s), w) == want) ++matched;
      }
    }
    return "bit-exact on " + std::to_string(matched) + " matrices";
  });
  return rep;
}

// ---- criterion 8: double centralizer ----------------------------------------

CriterionReport criterion8(const ChecklistOptions&) {
  CriterionReport rep;
  rep.index = 8;
  rep.title = "double centralizer recovers the commutant";

  check(rep, "double-centralizer-2-1-r5-p3", "literature", "120",
        [] { return std::to_string(commutant::double_centralizer_dim(2, 1, 5, 3)); });
  check(rep, "double-centralizer-1-1-r3-p3", "oracle", "6",
        [] { return std::to_string(commutant::double_centralizer_dim(1, 1, 3, 3)); });
  return rep;
}

// ---- criterion 9: characteristic comparison ----------------------------------

CriterionReport criterion9(const ChecklistOptions&) {
  CriterionReport rep;
  rep.index = 9;
  rep.title = "characteristic comparison of commutant dimensions";

  check(rep, "endo-dim-dominates-char0", "literature", "no violations on 11 instances", [] {
    struct Inst {
      int m, n, r;
      uint32_t p;
    };
    std::vector<Inst> insts;
    for (uint32_t p : {3u, 5u})
      for (int r = 2; r <= 6; ++r) insts.push_back({1, 1, r, p});
    insts.push_back({2, 1, 5, 3});
    for (const auto& q : insts)
      if (commutant::endo_dim(q.m, q.n, q.r, q.p) <
          combinatorics::dim_endo_char0(q.m, q.n, q.r))
        return "violation at " + mnp(q.m, q.n, q.p) + "-r" + std::to_string(q.r);
    return std::string("no violations on 11 instances");
  });

  for (int r = 2; r <= 6; ++r)
    check(rep, "rank-char0-1-1-r" + std::to_string(r), "oracle",
          std::to_string(combinatorics::dim_endo_char0(1, 1, r)),
          [r] { return std::to_string(superspace::phi_rank_char0(1, 1, r)); });
  check(rep, "rank-char0-2-1-r5", "literature", "120",
        [] { return std::to_string(superspace::phi_rank_char0(2, 1, 5)); });
  return rep;
}

}  // namespace

const int kCriterionCount = 9;

CriterionReport run_criterion(int index, const ChecklistOptions& opt) {
  auto t0 = Clock::now();
  CriterionReport rep;
  switch (index) {
    case 1: rep = criterion1(opt); break;
    case 2: rep = criterion2(opt); break;
    case 3: rep = criterion3(opt); break;
    case 4: rep = criterion4(opt); break;
    case 5: rep = criterion5(opt); break;
    case 6: rep = criterion6(opt); break;
    case 7: rep = criterion7(opt); break;
    case 8: rep = criterion8(opt); break;
    case 9: rep = criterion9(opt); break;
    default: throw std::invalid_argument("criterion index out of range");
  }
  rep.ms = ms_since(t0);
  return rep;
}

ChecklistReport run_all(const ChecklistOptions& opt) {
  ChecklistReport rep;
  for (int i = 1; i <= kCriterionCount; ++i) rep.criteria.push_back(run_criterion(i, opt));
  return rep;
}

void write_table(std::ostream& os, const ChecklistReport& rep) {
  for (const auto& c : rep.criteria) {
    os << "criterion " << c.index << ": " << c.title << " -- " << c.summary() << "\n";
    for (const auto& r : c.rows) {
      os << "  [" << (r.pass ? "ok" : "FAIL") << "] " << r.claim_id << ": computed " << r.computed
         << ", expected " << r.expected << " (" << r.provenance << ", "
         << static_cast<int64_t>(r.ms) << " ms)\n";
    }
    for (const auto& s : c.skipped) os << "  [skip] " << s << "\n";
  }
  os << (rep.pass() ? "ALL CRITERIA PASS" : "CRITERIA FAILED") << "\n";
}

void write_json(std::ostream& os, const ChecklistReport& rep) {
  nlohmann::json root;
  root["pass"] = rep.pass();
  root["criteria"] = nlohmann::json::array();
  for (const auto& c : rep.criteria) {
    nlohmann::json jc;
    jc["index"] = c.index;
    jc["title"] = c.title;
    jc["pass"] = c.pass();
    jc["summary"] = c.summary();
    jc["skipped"] = c.skipped;
    jc["checks"] = nlohmann::json::array();
    for (const auto& r : c.rows) {
      nlohmann::json jr;
      jr["claim_id"] = r.claim_id;
      jr["computed"] = r.computed;
      jr["expected"] = r.expected;
      jr["provenance"] = r.provenance;
      jr["pass"] = r.pass;
      jr["ms"] = r.ms;
      jc["checks"].push_back(jr);
    }
    root["criteria"].push_back(jc);
  }
  os << root.dump(2) << "\n";
}

}  // namespace schurw::checklist
