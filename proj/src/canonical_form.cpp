#include "tame/canonical_form.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tame {

namespace {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Diagonal of the Smith normal form of a square polynomial matrix of full
/// rank, made monic.
std::vector<Polynomial> smith_diagonal(PolyMatrix a) {
  std::size_t n = a.size();
  std::vector<Polynomial> diag;
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // Smallest-degree nonzero entry of the trailing block becomes the pivot.
      std::size_t bi = n, bj = n;
      int best = -1;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (!a[i][j].is_zero() && (best < 0 || a[i][j].degree() < best)) {
            best = a[i][j].degree();
            bi = i;
            bj = j;
          }
      if (best < 0) throw std::logic_error("smith_diagonal: singular characteristic matrix");
      std::swap(a[t], a[bi]);
      for (std::size_t i = 0; i < n; ++i) std::swap(a[i][t], a[i][bj]);

      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (a[i][t].is_zero()) continue;
        auto [q, r] = a[i][t].divmod(a[t][t]);
        for (std::size_t j = t; j < n; ++j) a[i][j] = a[i][j] - q * a[t][j];
        if (!r.is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j].is_zero()) continue;
        auto [q, r] = a[t][j].divmod(a[t][t]);
        for (std::size_t i = t; i < n; ++i) a[i][j] = a[i][j] - q * a[i][t];
        if (!r.is_zero()) clean = false;
      }
      if (!clean) continue;

      // The pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < n && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!(a[i][j] % a[t][t]).is_zero()) {
            for (std::size_t k = t; k < n; ++k) a[t][k] = a[t][k] + a[i][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(a[t][t].monic());
  }
  return diag;
}

/// Divides out (x - root) as often as possible.
int strip_root(Polynomial& p, const Scalar& root) {
  Polynomial lin = Polynomial::linear(p.field(), root);
  int k = 0;
  for (;;) {
    auto [q, r] = p.divmod(lin);
    if (!r.is_zero()) break;
    p = q;
    ++k;
  }
  return k;
}

int strip_factor(Polynomial& p, const Polynomial& factor) {
  int k = 0;
  for (;;) {
    auto [q, r] = p.divmod(factor);
    if (!r.is_zero()) break;
    p = q;
    ++k;
  }
  return k;
}

std::vector<mpz_class> divisors(const mpz_class& n_in, bool& ok) {
  mpz_class n = abs(n_in);
  std::vector<mpz_class> out;
  ok = true;
  if (n > mpz_class("1000000000000")) {
    ok = false;
    return out;
  }
  for (mpz_class d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

/// Every monic polynomial of the given degree over GF(p), enumerated in
/// lexicographic order of the lower coefficients.
template <class Fn>
void for_each_monic(const Field& f, int degree, Fn&& fn) {
  std::int64_t p = f.characteristic();
  std::vector<std::int64_t> digits(static_cast<std::size_t>(degree), 0);
  for (;;) {
    std::vector<Scalar> c(static_cast<std::size_t>(degree) + 1);
    for (int k = 0; k < degree; ++k) c[static_cast<std::size_t>(k)] = Scalar(static_cast<long>(digits[static_cast<std::size_t>(k)]));
    c[static_cast<std::size_t>(degree)] = 1;
    if (!fn(Polynomial(f, std::move(c)))) return;
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == p) digits[k++] = 0;
    if (k == digits.size()) return;
  }
}

struct Factorization {
  std::map<Scalar, int> roots;  // root -> exponent
  std::vector<ResidualBlock> rest;
};

void factor_over_prime(Polynomial p, Factorization& out) {
  const Field& f = p.field();
  std::int64_t q = f.characteristic();
  if (q <= kRootSearchLimit) {
    for (std::int64_t v = 0; v < q && p.degree() > 0; ++v) {
      Scalar root(static_cast<long>(v));
      if (!Field::is_zero(p.eval(root))) continue;
      out.roots[root] += strip_root(p, root);
    }
  } else {
    out.rest.push_back({p, 1, false});
    return;
  }
  // Trial division by irreducibles of increasing degree while affordable.
  for (int d = 2; 2 * d <= p.degree(); ++d) {
    double budget = 1.0;
    for (int k = 0; k < d; ++k) budget *= static_cast<double>(q);
    if (budget > static_cast<double>(kRootSearchLimit)) {
      out.rest.push_back({p, 1, false});
      return;
    }
    for_each_monic(f, d, [&](const Polynomial& cand) {
      if (2 * d > p.degree()) return false;
      int e = strip_factor(p, cand);
      if (e > 0) out.rest.push_back({cand, e, true});
      return true;
    });
  }
  if (p.degree() > 0) out.rest.push_back({p, 1, true});
}

void factor_over_rationals(Polynomial p, Factorization& out) {
  if (p.degree() > 0 && Field::is_zero(p.coeff(0))) out.roots[Scalar(0)] += strip_root(p, Scalar(0));

  bool ok_a = true, ok_b = true;
  if (p.degree() > 0) {
    // Integer multiple of p for the rational root test.
    mpz_class lcm_den = 1;
    for (const auto& c : p.coeffs()) lcm_den = lcm(lcm_den, mpz_class(c.get_den()));
    std::vector<mpz_class> ints;
    for (const auto& c : p.coeffs()) ints.push_back(mpz_class(c * lcm_den));
    auto num_div = divisors(ints.front(), ok_a);
    auto den_div = divisors(ints.back(), ok_b);
    if (ok_a && ok_b) {
      std::vector<Scalar> cands;
      for (const auto& a : num_div)
        for (const auto& b : den_div) {
          Scalar r(a, b);
          r.canonicalize();
          cands.push_back(r);
          cands.push_back(-r);
        }
      std::sort(cands.begin(), cands.end());
      cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
      for (const auto& r : cands) {
        if (p.degree() <= 0) break;
        if (!Field::is_zero(p.eval(r))) continue;
        out.roots[r] += strip_root(p, r);
      }
    }
  }
  if (p.degree() <= 0) return;
  if (!ok_a || !ok_b) {
    out.rest.push_back({p, 1, false});
    return;
  }
  // Square-free decomposition (characteristic zero): p = prod a_i^i.
  Polynomial a = p.monic();
  Polynomial b = a.derivative();
  Polynomial c = gcd(a, b);
  Polynomial w = a / c;
  int i = 1;
  while (w.degree() > 0) {
    Polynomial y = gcd(w, c);
    Polynomial z = w / y;
    if (z.degree() > 0) out.rest.push_back({z, i, z.degree() <= 3});
    w = y;
    c = c / y;
    ++i;
  }
}

}  // namespace

std::size_t EndoCanonicalForm::cells_with_eigenvalue(const Scalar& lambda) const {
  return static_cast<std::size_t>(
      std::count_if(split_cells.begin(), split_cells.end(), [&](const JordanCell& c) { return c.lambda == lambda; }));
}

EndoCanonicalForm canonical_form(const Matrix& t) {
  if (!t.is_square()) throw std::invalid_argument("canonical_form: matrix must be square");
  const Field& f = t.field();
  std::size_t n = t.rows();
  EndoCanonicalForm out;
  out.dimension = n;
  out.char_poly = Polynomial::constant(f, f.one());
  if (n == 0) return out;

  PolyMatrix a(n, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial entry = Polynomial::constant(f, f.neg(t(i, j)));
      if (i == j) entry = entry + Polynomial::x(f);
      a[i][j] = entry;
    }
  std::vector<Polynomial> diag = smith_diagonal(std::move(a));
  std::stable_sort(diag.begin(), diag.end(), [](const Polynomial& x, const Polynomial& y) { return x.degree() < y.degree(); });
  for (auto& d : diag) {
    out.char_poly = out.char_poly * d;
    if (d.degree() >= 1) out.invariant_factors.push_back(d);
  }

  for (const auto& inv : out.invariant_factors) {
    Factorization fac;
    if (f.is_prime())
      factor_over_prime(inv, fac);
    else
      factor_over_rationals(inv, fac);
    for (const auto& [root, k] : fac.roots) out.split_cells.push_back({root, k});
    for (auto& r : fac.rest) out.residual_blocks.push_back(std::move(r));
  }
  std::sort(out.split_cells.begin(), out.split_cells.end(), [](const JordanCell& x, const JordanCell& y) {
    if (x.lambda != y.lambda) return x.lambda < y.lambda;
    return x.size < y.size;
  });
  return out;
}

Matrix jordan_cell_matrix(Field field, const Scalar& lambda, int k) {
  Matrix m(field, static_cast<std::size_t>(k), static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    m(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = field.canonical(lambda);
    if (i + 1 < k) m(static_cast<std::size_t>(i), static_cast<std::size_t>(i + 1)) = 1;
  }
  return m;
}

Matrix companion_matrix(const Polynomial& monic) {
  const Field& f = monic.field();
  std::size_t n = static_cast<std::size_t>(monic.degree());
  Matrix m(f, n, n);
  for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = f.neg(monic.coeff(i));
  return m;
}

}  // namespace tame
