#include "sectio/polytope.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <string>
#include <utility>

namespace sectio {

namespace {

using QVec = std::vector<mpq_class>;
using QMat = std::vector<QVec>;

// Row-reduce in place; returns pivot column per row.
std::vector<int> rref(QMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const size_t cols = m[0].size();
  size_t row = 0;
  for (size_t col = 0; col < cols && row < m.size(); ++col) {
    size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const mpq_class inv = 1 / m[row][col];
    for (size_t j = col; j < cols; ++j) m[row][j] *= inv;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      const mpq_class f = m[i][col];
      for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  m.resize(row);
  return pivots;
}

// Basis of { x : M x = 0 }.
QMat nullspace(QMat m, size_t cols) {
  const std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
  QMat basis;
  for (size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    QVec v(cols, 0);
    v[fc] = 1;
    for (size_t r = 0; r < m.size(); ++r)
      v[static_cast<size_t>(pivots[r])] = -m[r][fc];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solves square M x = rhs; M must be invertible.
QVec solve_square(QMat m, QVec rhs) {
  const size_t n = m.size();
  for (size_t i = 0; i < n; ++i) m[i].push_back(rhs[i]);
  rref(m);
  QVec x(n, 0);
  for (size_t r = 0; r < m.size(); ++r) {
    size_t col = 0;
    while (col < n && m[r][col] == 0) ++col;
    if (col < n) x[col] = m[r][n];
  }
  return x;
}

mpq_class dot(const QVec& a, const QVec& b) {
  mpq_class s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Scale so entries are coprime integers; sign is preserved.
void make_primitive(QVec& v, mpq_class& c) {
  mpz_class l = 1;
  for (const auto& x : v) l = lcm(l, x.get_den());
  l = lcm(l, c.get_den());
  mpz_class g = 0;
  QVec scaled(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    scaled[i] = v[i] * mpq_class(l);
    g = gcd(g, scaled[i].get_num());
  }
  mpq_class cs = c * mpq_class(l);
  g = gcd(g, cs.get_num());
  if (g == 0) g = 1;
  for (size_t i = 0; i < v.size(); ++i) v[i] = scaled[i] / mpq_class(g);
  c = cs / mpq_class(g);
}

// Linear constraint <a, x> <= c (strict: <).
struct LinCon {
  QVec a;
  mpq_class c;
  bool strict = false;
};

// Constraint <= is tighter when the bound is smaller; at equal bounds the
// strict one wins.
bool tighter(const std::pair<mpq_class, bool>& x, const std::pair<mpq_class, bool>& y) {
  return x.first < y.first || (x.first == y.first && x.second && !y.second);
}

// Exact Fourier-Motzkin feasibility with strictness tracking. Eliminates all
// variables; duplicate normals keep only the tightest bound.
bool fm_feasible(std::vector<LinCon> cons, size_t nvars) {
  auto prune = [](std::vector<LinCon>& cs) -> bool {
    std::map<QVec, std::pair<mpq_class, bool>> best;
    for (auto& con : cs) {
      bool all_zero = true;
      for (const auto& x : con.a)
        if (x != 0) {
          all_zero = false;
          break;
        }
      if (all_zero) {
        if (con.c < 0 || (con.strict && con.c == 0)) return false;
        continue;
      }
      make_primitive(con.a, con.c);
      auto [it, inserted] = best.emplace(con.a, std::make_pair(con.c, con.strict));
      if (!inserted && tighter({con.c, con.strict}, it->second))
        it->second = {con.c, con.strict};
    }
    cs.clear();
    for (auto& [a, bound] : best)
      cs.push_back(LinCon{a, bound.first, bound.second});
    return true;
  };

  if (!prune(cons)) return false;

  std::vector<bool> eliminated(nvars, false);
  for (size_t round = 0; round < nvars; ++round) {
    // Greedy order: smallest lower*upper product first.
    size_t var = nvars;
    size_t best_cost = SIZE_MAX;
    for (size_t v = 0; v < nvars; ++v) {
      if (eliminated[v]) continue;
      size_t lo = 0, hi = 0;
      for (const auto& con : cons) {
        if (con.a[v] < 0) ++lo;
        if (con.a[v] > 0) ++hi;
      }
      const size_t cost = lo * hi;
      if (cost < best_cost) {
        best_cost = cost;
        var = v;
      }
    }
    if (var == nvars) break;
    eliminated[var] = true;

    std::vector<LinCon> lows, highs, rest;
    for (auto& con : cons) {
      if (con.a[var] < 0)
        lows.push_back(std::move(con));
      else if (con.a[var] > 0)
        highs.push_back(std::move(con));
      else
        rest.push_back(std::move(con));
    }
    for (const auto& lo : lows)
      for (const auto& hi : highs) {
        LinCon mix;
        mix.a.resize(nvars);
        const mpq_class wl = hi.a[var];   // > 0
        const mpq_class wh = -lo.a[var];  // > 0
        for (size_t j = 0; j < nvars; ++j) mix.a[j] = wl * lo.a[j] + wh * hi.a[j];
        mix.c = wl * lo.c + wh * hi.c;
        mix.strict = lo.strict || hi.strict;
        rest.push_back(std::move(mix));
      }
    cons = std::move(rest);
    if (!prune(cons)) return false;
  }
  return true;
}

std::vector<LinCon> polytope_constraints(const NewtonPolytope& np) {
  std::vector<LinCon> cons;
  cons.reserve(np.halfspaces.size());
  for (const auto& hs : np.halfspaces)
    cons.push_back(LinCon{hs.normal, hs.offset, hs.strict});
  return cons;
}

// Does z + [0,1)^dim meet the polytope?
bool box_meets(const NewtonPolytope& np, const std::vector<LinCon>& base, const Expo& z) {
  std::vector<LinCon> cons = base;
  const size_t dim = static_cast<size_t>(np.dim);
  for (size_t k = 0; k < dim; ++k) {
    LinCon lo;
    lo.a.assign(dim, 0);
    lo.a[k] = -1;
    lo.c = -z[k];
    cons.push_back(std::move(lo));
    LinCon hi;
    hi.a.assign(dim, 0);
    hi.a[k] = 1;
    hi.c = z[k] + 1;
    hi.strict = true;
    cons.push_back(std::move(hi));
  }
  return fm_feasible(std::move(cons), dim);
}

std::vector<std::vector<int64_t>> support_points(const MultiPoly& A) {
  if (A.is_zero())
    raise(ErrorCode::ZeroPolynomial, "Newton polytope of the zero polynomial");
  std::vector<std::vector<int64_t>> pts;
  pts.reserve(A.terms().size());
  for (const auto& [e, c] : A.terms()) {
    std::vector<int64_t> p(e.size());
    for (size_t k = 0; k < e.size(); ++k) p[k] = e[k];
    pts.push_back(std::move(p));
  }
  return pts;
}

int64_t checked_count(size_t n) { return static_cast<int64_t>(n); }

mpz_class binom(int64_t a, int64_t b) {
  if (b < 0 || a < b) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

// Deterministic parallel map over an index range.
template <typename Fn>
std::vector<char> parallel_flags(size_t count, int threads, Fn&& fn) {
  std::vector<char> flags(count, 0);
  if (threads <= 1 || count < 64) {
    for (size_t i = 0; i < count; ++i) flags[i] = fn(i) ? 1 : 0;
    return flags;
  }
  const size_t chunks = static_cast<size_t>(threads);
  std::vector<std::future<void>> futs;
  for (size_t c = 0; c < chunks; ++c) {
    futs.push_back(std::async(std::launch::async, [&, c] {
      for (size_t i = c; i < count; i += chunks) flags[i] = fn(i) ? 1 : 0;
    }));
  }
  for (auto& f : futs) f.get();
  return flags;
}

}  // namespace

NewtonPolytope hull_of_points(std::vector<std::vector<int64_t>> points, int dim) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.empty())
    raise(ErrorCode::ZeroPolynomial, "hull of an empty point set");

  NewtonPolytope np;
  np.dim = dim;
  const size_t d = static_cast<size_t>(dim);
  const auto& p0 = points[0];

  // Directions spanning the affine hull.
  QMat dirs;
  for (size_t i = 1; i < points.size(); ++i) {
    QVec row(d);
    for (size_t k = 0; k < d; ++k) row[k] = points[i][k] - p0[k];
    dirs.push_back(std::move(row));
  }
  QMat basis = dirs;
  const std::vector<int> pivots = rref(basis);
  const size_t r = basis.size();

  // Affine-hull equalities, emitted as opposite halfspace pairs.
  QMat eq_normals = nullspace(basis.empty() ? QMat{QVec(d, 0)} : basis, d);
  for (auto& nu : eq_normals) {
    mpq_class c = 0;
    for (size_t k = 0; k < d; ++k) c += nu[k] * p0[k];
    QVec neg(d);
    for (size_t k = 0; k < d; ++k) neg[k] = -nu[k];
    mpq_class nc = -c;
    make_primitive(nu, c);
    make_primitive(neg, nc);
    np.halfspaces.push_back(Halfspace{nu, c, false});
    np.halfspaces.push_back(Halfspace{neg, nc, false});
  }

  if (r == 0) {
    np.vertices.push_back(p0);
    return np;
  }

  // Coordinates of every point over the affine basis: rows of `basis` are in
  // reduced echelon form, so the pivot entries of the difference vector are
  // the coordinates directly.
  QMat coords(points.size(), QVec(r, 0));
  for (size_t i = 0; i < points.size(); ++i) {
    for (size_t j = 0; j < r; ++j)
      coords[i][j] = mpq_class(points[i][static_cast<size_t>(pivots[j])] -
                               p0[static_cast<size_t>(pivots[j])]);
  }

  // Facets: hyperplanes in coordinate space spanned by r points with all
  // points on one side.
  std::map<std::pair<QVec, mpq_class>, bool> facet_set;
  std::vector<size_t> idx(r);
  std::vector<bool> select(points.size(), false);
  std::fill(select.begin(), select.begin() + static_cast<long>(r), true);
  std::sort(select.begin(), select.end());  // lexicographic combination walk
  do {
    size_t j = 0;
    for (size_t i = 0; i < points.size(); ++i)
      if (select[i]) idx[j++] = i;
    if (r >= 2) {
      QMat span(r - 1, QVec(r));
      for (size_t i = 1; i < r; ++i)
        for (size_t k = 0; k < r; ++k)
          span[i - 1][k] = coords[idx[i]][k] - coords[idx[0]][k];
      QMat ns = nullspace(std::move(span), r);
      if (ns.size() != 1) continue;
      QVec nu = std::move(ns[0]);
      mpq_class c = dot(nu, coords[idx[0]]);
      int sign = 0;
      bool facet = true;
      for (size_t i = 0; facet && i < points.size(); ++i) {
        const mpq_class v = dot(nu, coords[i]) - c;
        if (v == 0) continue;
        const int s = v > 0 ? 1 : -1;
        if (sign == 0)
          sign = s;
        else if (sign != s)
          facet = false;
      }
      if (!facet || sign == 0) continue;
      if (sign > 0) {
        for (auto& x : nu) x = -x;
        c = -c;
      }
      make_primitive(nu, c);
      facet_set.emplace(std::make_pair(std::move(nu), std::move(c)), true);
    } else {
      // 1-dimensional hull: facets are the two endpoints.
      QVec nu{1};
      mpq_class c = coords[idx[0]][0];
      bool is_max = true, is_min = true;
      for (size_t i = 0; i < points.size(); ++i) {
        if (coords[i][0] > c) is_max = false;
        if (coords[i][0] < c) is_min = false;
      }
      if (is_max) facet_set.emplace(std::make_pair(nu, c), true);
      if (is_min) {
        QVec neg{-1};
        mpq_class nc = -c;
        facet_set.emplace(std::make_pair(std::move(neg), std::move(nc)), true);
      }
    }
  } while (std::next_permutation(select.begin(), select.end()));

  // Lift facet normals back to ambient space: solve for nu_amb agreeing with
  // the coordinate normal on the basis directions and vanishing on the
  // equality normals.
  QMat lift(d, QVec(d));
  for (size_t i = 0; i < r; ++i) lift[i] = basis[i];
  for (size_t i = 0; i < eq_normals.size(); ++i) lift[r + i] = eq_normals[i];

  std::vector<std::pair<QVec, mpq_class>> coord_facets;
  for (auto& [key, unused] : facet_set) coord_facets.push_back(key);

  for (auto& [nu_l, c_l] : coord_facets) {
    QVec rhs(d, 0);
    for (size_t i = 0; i < r; ++i) rhs[i] = nu_l[i];
    QVec nu = solve_square(lift, rhs);
    mpq_class c = c_l;
    for (size_t k = 0; k < d; ++k) c += nu[k] * p0[k];
    make_primitive(nu, c);
    np.halfspaces.push_back(Halfspace{std::move(nu), std::move(c), false});
  }

  // Vertices: points whose active facet normals span coordinate space.
  for (size_t i = 0; i < points.size(); ++i) {
    QMat active;
    for (const auto& [nu_l, c_l] : coord_facets)
      if (dot(nu_l, coords[i]) == c_l) active.push_back(nu_l);
    QMat tmp = active;
    rref(tmp);
    if (tmp.size() == r) np.vertices.push_back(points[i]);
  }
  std::sort(np.vertices.begin(), np.vertices.end());
  return np;
}

NewtonPolytope newton_polytope(const MultiPoly& A) {
  return hull_of_points(support_points(A), A.nvars() + 1);
}

std::vector<Expo> box_lattice_points(const MultiPoly& A, int threads) {
  const NewtonPolytope np = newton_polytope(A);
  const size_t dim = static_cast<size_t>(np.dim);
  std::vector<int64_t> maxc(dim, 0);
  for (const auto& v : np.vertices)
    for (size_t k = 0; k < dim; ++k) maxc[k] = std::max(maxc[k], v[k]);

  std::vector<Expo> grid;
  Expo z(dim, 0);
  while (true) {
    grid.push_back(z);
    size_t k = 0;
    while (k < dim) {
      if (++z[k] <= maxc[k]) break;
      z[k] = 0;
      ++k;
    }
    if (k == dim) break;
  }

  const std::vector<LinCon> base = polytope_constraints(np);
  const std::vector<char> keep = parallel_flags(
      grid.size(), threads, [&](size_t i) { return box_meets(np, base, grid[i]); });

  std::vector<Expo> out;
  for (size_t i = 0; i < grid.size(); ++i)
    if (keep[i]) out.push_back(grid[i]);
  std::sort(out.begin(), out.end());
  return out;
}

int64_t count_box_points(const MultiPoly& A, int threads) {
  return checked_count(box_lattice_points(A, threads).size());
}

int64_t bound_closed_form(const DegreeProfile& dp, int n) {
  mpz_class prod_hi1 = 1, prod_hi = 1;
  for (int32_t h : dp.hvec) {
    prod_hi1 *= h + 1;
    prod_hi *= h;
  }
  const mpz_class first = prod_hi1 - prod_hi;
  const mpz_class second = binom(n + dp.h, n) - binom(dp.h, n);
  const mpz_class N = mpz_class(dp.d + 1) * std::min(first, second);
  if (!N.fits_slong_p())
    raise(ErrorCode::MalformedInput, "closed-form bound exceeds machine range");
  return N.get_si();
}

int64_t count_diagonal_classes(const MultiPoly& A, int threads) {
  const NewtonPolytope np = newton_polytope(A);
  const DegreeProfile dp = degree_profile(A);
  const int n = A.nvars();
  const size_t dim = static_cast<size_t>(n) + 1;

  // Candidate class representatives: some zero t-coordinate, t-coordinates
  // within the partial heights, y-coordinate within the degree.
  std::vector<Expo> cands;
  Expo a(static_cast<size_t>(n), 0);
  while (true) {
    bool has_zero = false;
    for (int k = 0; k < n; ++k) has_zero = has_zero || a[static_cast<size_t>(k)] == 0;
    if (has_zero) {
      for (int32_t b = 0; b <= dp.d; ++b) {
        Expo c = a;
        c.push_back(b);
        cands.push_back(std::move(c));
      }
    }
    size_t k = 0;
    while (k < static_cast<size_t>(n)) {
      if (++a[k] <= dp.hvec[k]) break;
      a[k] = 0;
      ++k;
    }
    if (k == static_cast<size_t>(n)) break;
  }

  // Feasibility of (a - lambda*(1,...,1), y) in NP(A) with y in [b, b+1),
  // eliminating (lambda, y) exactly.
  auto feasible = [&](size_t i) {
    const Expo& cand = cands[i];
    const int32_t b = cand[static_cast<size_t>(n)];
    std::vector<LinCon> cons;
    for (const auto& hs : np.halfspaces) {
      LinCon con;
      con.a.resize(2);
      mpq_class tsum = 0, shift = 0;
      for (int k = 0; k < n; ++k) {
        tsum += hs.normal[static_cast<size_t>(k)];
        shift += hs.normal[static_cast<size_t>(k)] * cand[static_cast<size_t>(k)];
      }
      con.a[0] = -tsum;                // lambda coefficient
      con.a[1] = hs.normal[dim - 1];   // y coefficient
      con.c = hs.offset - shift;
      con.strict = hs.strict;
      cons.push_back(std::move(con));
    }
    cons.push_back(LinCon{{0, -1}, mpq_class(-b), false});    // y >= b
    cons.push_back(LinCon{{0, 1}, mpq_class(b) + 1, true});   // y < b+1
    return fm_feasible(std::move(cons), 2);
  };

  const std::vector<char> keep = parallel_flags(cands.size(), threads, feasible);
  int64_t count = 0;
  for (char k : keep) count += k;
  return count;
}

BoundReport bound_report(const MultiPoly& A, int threads) {
  BoundReport r;
  r.N_closed = bound_closed_form(degree_profile(A), A.nvars());
  r.N_box = count_box_points(A, threads);
  r.N_diag = count_diagonal_classes(A, threads);
  r.N_effective = std::min(r.N_closed, r.N_diag);
  return r;
}

}  // namespace sectio
