#include "mukai/oracle.hpp"

#include "mukai/hodge.hpp"
#include "mukai/rng.hpp"

#include <array>
#include <iostream>

namespace mukai {

namespace {

// Scaled integer weights of the two pairing conditions <x,u> = <x,v> = 0.
struct BoxWeights {
  std::vector<Int> wu, wv;  // one per support index
  bool i64_safe = false;
  std::vector<std::int64_t> wu64, wv64;
};

BoxWeights box_weights(const GcyClass& phi, std::span<const int> support, int n) {
  PositivePlane p = plane_of(phi);
  QMat g = gram_mukai().cast<Rat>();
  Vec24q gu = g * p.u;
  Vec24q gv = g * p.v;
  Int scale(1);
  for (int idx : support) {
    scale = lcm(scale, gu(idx).den());
    scale = lcm(scale, gv(idx).den());
  }
  BoxWeights w;
  Int bound(0);
  for (int idx : support) {
    w.wu.push_back(gu(idx).num() * (scale / gu(idx).den()));
    w.wv.push_back(gv(idx).num() * (scale / gv(idx).den()));
    bound += (w.wu.back().abs() + w.wv.back().abs()) * Int(n);
  }
  if (bound < Int(1ll << 62)) {
    w.i64_safe = true;
    for (const Int& x : w.wu) w.wu64.push_back(x.to_i64());
    for (const Int& x : w.wv) w.wv64.push_back(x.to_i64());
  }
  return w;
}

}  // namespace

std::vector<Vec24i> box_pairing_kernel(const GcyClass& phi, int n,
                                       std::span<const int> support,
                                       const ProgressFn& progress) {
  if (n < 0 || n > 3)
    throw Error(Errc::Precondition, "box bound must be in [0, 3]");
  if (support.size() > 8)
    throw Error(Errc::Precondition, "box support is limited to 8 indices");
  for (int idx : support)
    if (idx < 0 || idx >= kTotalDim)
      throw Error(Errc::Precondition, "support index out of range");

  BoxWeights w = box_weights(phi, support, n);
  const int k = static_cast<int>(support.size());
  const int width = 2 * n + 1;
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) total *= width;

  std::vector<Vec24i> found;
  std::vector<int> coord(k, -n);
  std::uint64_t done = 0;

  auto emit = [&] {
    Vec24i v = Vec24i::Zero();
    for (int i = 0; i < k; ++i) v(support[i]) = Int(coord[i]);
    found.push_back(std::move(v));
  };

  if (w.i64_safe) {
    // Odometer enumeration with incremental partial sums.
    std::vector<std::int64_t> su(k + 1, 0), sv(k + 1, 0);
    for (int i = 0; i < k; ++i) {
      su[i + 1] = su[i] + w.wu64[i] * coord[i];
      sv[i + 1] = sv[i] + w.wv64[i] * coord[i];
    }
    for (;;) {
      if (su[k] == 0 && sv[k] == 0) emit();
      if (progress && (++done & 0xfff) == 0 && !progress(done, total)) break;
      int pos = k - 1;
      while (pos >= 0 && coord[pos] == n) --pos;
      if (pos < 0) break;
      ++coord[pos];
      for (int i = pos; i < k; ++i) {
        if (i > pos) coord[i] = -n;
        su[i + 1] = su[i] + w.wu64[i] * coord[i];
        sv[i + 1] = sv[i] + w.wv64[i] * coord[i];
      }
    }
  } else {
    std::vector<Int> su(k + 1), sv(k + 1);
    for (int i = 0; i < k; ++i) {
      su[i + 1] = su[i] + w.wu[i] * Int(coord[i]);
      sv[i + 1] = sv[i] + w.wv[i] * Int(coord[i]);
    }
    for (;;) {
      if (su[k].is_zero() && sv[k].is_zero()) emit();
      if (progress && (++done & 0xfff) == 0 && !progress(done, total)) break;
      int pos = k - 1;
      while (pos >= 0 && coord[pos] == n) --pos;
      if (pos < 0) break;
      ++coord[pos];
      for (int i = pos; i < k; ++i) {
        if (i > pos) coord[i] = -n;
        su[i + 1] = su[i] + w.wu[i] * Int(coord[i]);
        sv[i + 1] = sv[i] + w.wv[i] * Int(coord[i]);
      }
    }
  }
  return found;
}

bool snf_small_check(const IMat& a) {
  if (a.rows() > 4 || a.cols() > 4)
    throw Error(Errc::Precondition, "snf_small_check is limited to 4 x 4");
  auto s = snf(a);
  const int k = static_cast<int>(std::min(a.rows(), a.cols()));

  // gcd of all t x t minors, by direct enumeration.
  std::vector<int> ridx, cidx;
  Int minor_gcd;
  std::function<void(int, int, int)> cols_loop;
  auto det_sub = [&]() {
    const int t = static_cast<int>(ridx.size());
    IMat sub(t, t);
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j) sub(i, j) = a(ridx[i], cidx[j]);
    minor_gcd = gcd(minor_gcd, det_bareiss(sub));
  };
  std::function<void(int, int)> pick_cols = [&](int start, int left) {
    if (left == 0) {
      det_sub();
      return;
    }
    for (int c = start; c <= a.cols() - left; ++c) {
      cidx.push_back(c);
      pick_cols(c + 1, left - 1);
      cidx.pop_back();
    }
  };
  std::function<void(int, int)> pick_rows = [&](int start, int left) {
    if (left == 0) {
      pick_cols(0, static_cast<int>(ridx.size()));
      return;
    }
    for (int r = start; r <= a.rows() - left; ++r) {
      ridx.push_back(r);
      pick_rows(r + 1, left - 1);
      ridx.pop_back();
    }
  };

  Int prod(1);
  for (int t = 1; t <= k; ++t) {
    minor_gcd = Int(0);
    ridx.clear();
    cidx.clear();
    pick_rows(0, t);
    prod *= s.d(t - 1, t - 1);
    if (prod != minor_gcd) return false;
  }
  return true;
}

namespace {

GradedC random_class(Rng& rng, long long bound) {
  GradedC x;
  x.r = rng.crat(bound);
  for (int i = 0; i < kH2Dim; ++i) x.c(i) = rng.crat(bound);
  x.s = rng.crat(bound);
  return x;
}

// int64 copy of the HNF back-substitution membership test, for sweeping
// whole coordinate boxes. Usable only for bases with entries in [-4, 4]:
// the residual grows by at most a factor 1 + max|entry| per row, so
// n * 5^24 < 2^63 bounds every intermediate for box bounds n <= 3.
struct FastMembership {
  std::array<std::array<std::int64_t, kTotalDim>, kTotalDim> rows{};
  std::array<int, kTotalDim> pivot{};
  int rank = 0;
  bool usable = false;

  explicit FastMembership(const Sublattice& l) {
    rank = l.rank();
    usable = true;
    for (int i = 0; i < rank && usable; ++i) {
      int pc = -1;
      for (int j = 0; j < kTotalDim; ++j) {
        const Int& e = l.basis()(i, j);
        if (e.abs() > Int(4)) {
          usable = false;
          break;
        }
        rows[i][j] = e.to_i64();
        if (pc < 0 && rows[i][j] != 0) pc = j;
      }
      pivot[i] = pc;
    }
  }

  bool contains(const std::array<std::int64_t, kTotalDim>& v) const {
    std::array<std::int64_t, kTotalDim> rest = v;
    for (int i = 0; i < rank; ++i) {
      std::int64_t p = rows[i][pivot[i]];
      std::int64_t x = rest[pivot[i]];
      if (x % p != 0) return false;
      std::int64_t q = x / p;
      if (q != 0)
        for (int j = pivot[i]; j < kTotalDim; ++j) rest[j] -= q * rows[i][j];
    }
    for (int j = 0; j < kTotalDim; ++j)
      if (rest[j] != 0) return false;
    return true;
  }
};

struct Gate {
  std::ostream& out;
  bool all_ok = true;
  void report(const char* name, bool ok, const std::string& detail = "") {
    out << "gate " << name << ": " << (ok ? "ok" : "FAIL");
    if (!ok && !detail.empty()) out << "  " << detail;
    out << "\n";
    all_ok = all_ok && ok;
  }
};

}  // namespace

bool selftest(const SelftestOptions& options) {
  std::ostream& out = options.out ? *options.out : std::cout;
  Gate gate{out};
  Rng rng(options.seed);

  {
    bool ok = true;
    std::string detail;
    for (int t = 0; t < 10000 && ok; ++t) {
      GradedC x = random_class(rng, 8);
      GradedC y = random_class(rng, 8);
      CRat main = mukai_pair(x, y);
      CRat expanded = expand_pairing(x, y);
      if (main != expanded) {
        ok = false;
        detail = "mukai_pair = " + main.to_string() + ", expand_pairing = " + expanded.to_string();
      }
    }
    // The shared fixed examples are part of the gate.
    GradedI one(Int(1), Vec22i::Zero(), Int(0));
    GradedI top(Int(0), Vec22i::Zero(), Int(1));
    ok = ok && expand_pairing(one, top) == Int(-1);
    GradedI hyp(Int(1), Vec22i(h2_unit<Int>(0) + h2_unit<Int>(1)), Int(1));
    ok = ok && expand_pairing(hyp, hyp).is_zero() && mukai_pair(hyp, hyp).is_zero();
    gate.report("pairing-agreement", ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (int t = 0; t < 1000 && ok; ++t) {
      int r = 1 + static_cast<int>(rng.below(4));
      int c = 1 + static_cast<int>(rng.below(4));
      IMat m(r, c);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = Int(rng.range(-9, 9));
      if (!snf_small_check(m)) {
        ok = false;
        detail = "minor characterization failed on a random matrix";
      }
    }
    gate.report("snf-minors", ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (int t = 0; t < 300 && ok; ++t) {
      int r = 1 + static_cast<int>(rng.below(6));
      int c = 1 + static_cast<int>(rng.below(6));
      IMat m(r, c);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = Int(rng.range(-20, 20));
      auto e = hnf(m);
      auto e2 = hnf(e.h);
      if (e2.h != e.h) {
        ok = false;
        detail = "hnf not idempotent";
      } else if (det_bareiss(e.u).abs() != Int(1)) {
        ok = false;
        detail = "hnf transform not unimodular";
      } else if (IMat(e.u * m) != e.h) {
        ok = false;
        detail = "u*a != h";
      }
    }
    gate.report("hnf-properties", ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (int t = 0; t < 300 && ok; ++t) {
      int n = 1 + static_cast<int>(rng.below(4));
      IMat m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = Int(rng.range(-9, 9));
      Int dm = det_bareiss(m);
      auto s = snf(m);
      Int prod(1);
      for (int i = 0; i < n; ++i) {
        prod *= s.d(i, i);
        if (i > 0 && !s.d(i - 1, i - 1).is_zero() &&
            !Int::divmod(s.d(i, i), s.d(i - 1, i - 1)).second.is_zero()) {
          ok = false;
          detail = "divisor chain broken";
        }
      }
      if (ok && prod != dm.abs()) {
        ok = false;
        detail = "product of invariant factors != |det|, " + prod.to_string() +
                 " vs " + dm.abs().to_string();
      }
      if (ok && (IMat(s.u * m * s.v) != s.d || det_bareiss(s.u).abs() != Int(1) ||
                 det_bareiss(s.v).abs() != Int(1))) {
        ok = false;
        detail = "u*a*v != d or transforms not unimodular";
      }
    }
    gate.report("snf-properties", ok, detail);
  }

  {
    // Box oracle against pic on the omega = e1 + f1 instance.
    bool ok = true;
    std::string detail;
    Vec22q w = Vec22q::Zero();
    w(e_idx(0)) = Rat(1);
    w(f_idx(0)) = Rat(1);
    GcyClass phi = GcyClass::validate(exp_i_omega(w));
    Sublattice p = pic(phi);
    std::vector<std::vector<int>> supports = {{0, 1, 2, 23}, {0, 1, 2, 3, 4, 5, 6, 7},
                                              {8, 9, 10, 11, 12, 13, 14, 15},
                                              {16, 17, 18, 19, 20, 21, 22, 23}};
    FastMembership fast(p);
    for (const auto& sup : supports) {
      auto kernel = box_pairing_kernel(phi, options.box, sup, options.progress);
      // Every oracle vector lies in pic, and every pic point of the box is
      // found: compare as sets via membership both ways.
      std::size_t members = 0;
      for (const auto& v : kernel)
        if (!p.contains(v)) {
          ok = false;
          detail = "oracle vector not in pic";
          break;
        }
      // Count box points in pic by a second enumeration over the support.
      std::vector<int> coord(sup.size(), -options.box);
      for (bool more = true; more && ok;) {
        bool in;
        if (fast.usable) {
          std::array<std::int64_t, kTotalDim> v{};
          for (std::size_t i = 0; i < sup.size(); ++i) v[sup[i]] = coord[i];
          in = fast.contains(v);
        } else {
          Vec24i v = Vec24i::Zero();
          for (std::size_t i = 0; i < sup.size(); ++i) v(sup[i]) = Int(coord[i]);
          in = p.contains(v);
        }
        if (in) ++members;
        int pos = static_cast<int>(sup.size()) - 1;
        while (pos >= 0 && coord[pos] == options.box) --pos;
        if (pos < 0)
          more = false;
        else {
          ++coord[pos];
          for (std::size_t i = pos + 1; i < sup.size(); ++i) coord[i] = -options.box;
        }
      }
      if (ok && members != kernel.size()) {
        ok = false;
        detail = "oracle found " + std::to_string(kernel.size()) + " points, pic box has " +
                 std::to_string(members);
      }
    }
    gate.report("box-vs-pic", ok, detail);
  }

  return gate.all_ok;
}

}  // namespace mukai
