#include "qkc/qk.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <random>
#include <thread>

#include "qkc/error.hpp"

namespace qkc {

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::Opposite: return "O";
    case Basis::Ideal: return "I";
    case Basis::QIdeal: return "Iq";
  }
  return "?";
}

Basis parse_basis(const std::string& s) {
  if (s == "O") return Basis::Opposite;
  if (s == "I") return Basis::Ideal;
  if (s == "Iq") return Basis::QIdeal;
  throw ConfigError("unknown basis '" + s + "'");
}

QPoly SchubertExpr::coeff(const Shape& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? QPoly() : it->second;
}

void SchubertExpr::add(const Shape& s, const QPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(s, c);
  if (!fresh && (it->second += c).is_zero()) terms_.erase(it);
}

void SchubertExpr::check_compatible(const SchubertExpr& o) const {
  if (o.is_zero() && o.space_.empty()) return;
  if (basis_ != o.basis_) throw DomainError("cannot combine " + basis_name(basis_) + " and " + basis_name(o.basis_) + " expressions");
  if (space_ != o.space_) throw DomainError("cannot combine expressions over " + space_ + " and " + o.space_);
}

SchubertExpr& SchubertExpr::operator+=(const SchubertExpr& o) {
  check_compatible(o);
  for (const auto& [s, c] : o.terms_) add(s, c);
  return *this;
}

SchubertExpr& SchubertExpr::operator-=(const SchubertExpr& o) {
  check_compatible(o);
  for (const auto& [s, c] : o.terms_) add(s, -c);
  return *this;
}

SchubertExpr SchubertExpr::scaled(const QPoly& c) const {
  SchubertExpr out(basis_, space_);
  for (const auto& [s, v] : terms_) out.add(s, c * v);
  return out;
}

SchubertExpr SchubertExpr::times_q(unsigned d) const {
  SchubertExpr out(basis_, space_);
  for (const auto& [s, v] : terms_) out.add(s, v.times_q(d));
  return out;
}

SchubertExpr SchubertExpr::nonequivariant() const {
  SchubertExpr out(basis_, space_);
  for (const auto& [s, v] : terms_) {
    QPoly c;
    for (const auto& [d, w] : v.coeffs()) {
      const std::size_t rank = w.terms().begin()->first.rank();
      c += QPoly(WeightPoly::constant(rank, restrict_nonequivariant(w)), d);
    }
    out.add(s, c);
  }
  return out;
}

namespace {

QPoly constant(const Poset& p, WeightPoly::Coeff c) { return QPoly(WeightPoly::constant(p.roots().rank(), c)); }

QPoly monomial(const WeightMonomial& m) { return QPoly(m.poly()); }

int sign_of(BoxSet s) { return std::popcount(s) % 2 ? -1 : 1; }

// Calls f on every submask of m, including 0 and m.
template <class F>
void for_submasks(BoxSet m, F&& f) {
  BoxSet sub = m;
  while (true) {
    f(sub);
    if (sub == 0) break;
    sub = (sub - 1) & m;
  }
}

}  // namespace

SchubertExpr ideal_sheaf(const Poset& p, const Shape& mu) {
  SchubertExpr out(Basis::Opposite, p.name());
  for_submasks(addable_boxes(p, mu), [&](BoxSet s) { out.add(Shape(mu.bits | s), constant(p, sign_of(s))); });
  return out;
}

SchubertExpr alpha(const Poset& p, const Shape& mu) {
  SchubertExpr out(Basis::Opposite, p.name());
  const WeightMonomial jm = J(p, mu);
  for (const Shape& eps : enumerate_shapes(p)) {
    if (!classify_skew(p, eps, mu).is_short()) continue;
    out.add(eps, monomial(sqrtJ(p, mu, eps) / (jm * J(p, eps))));
  }
  return out;
}

ChevalleyClassical chevalley_classical(const Poset& p, const Shape& mu) {
  ChevalleyClassical out{SchubertExpr(Basis::Ideal, p.name()), {}};
  for_submasks(addable_boxes(p, mu) & p.short_boxes(), [&](BoxSet s) {
    const Shape nu(mu.bits | s);
    out.ideal.add(nu, sign_of(s) == 1 ? monomial(sqrtJ(p, mu, nu)) : -monomial(sqrtJ(p, mu, nu)));
  });
  out.opposite = expand_ideal(p, out.ideal);
  return out;
}

SchubertExpr expand_ideal(const Poset& p, const SchubertExpr& e) {
  if (e.basis() == Basis::Opposite) return e;
  SchubertExpr out(Basis::Opposite, p.name());
  for (const auto& [nu, c] : e.terms()) {
    const SchubertExpr basis_elt = e.basis() == Basis::Ideal ? ideal_sheaf(p, nu) : quantized_ideal_sheaf(p, nu);
    out += basis_elt.scaled(c);
  }
  return out;
}

bool alpha_identity_check(const Poset& p, const Shape& mu) {
  SchubertExpr lhs(Basis::Ideal, p.name());
  const SchubertExpr a = alpha(p, mu);
  for (const auto& [eps, c] : a.terms()) lhs += chevalley_classical(p, eps).ideal.scaled(c);
  SchubertExpr rhs(Basis::Ideal, p.name());
  rhs.add(mu, constant(p, 1));
  return lhs == rhs && expand_ideal(p, lhs) == ideal_sheaf(p, mu);
}

SchubertExpr psi_expr(const Poset& p, const SchubertExpr& e) {
  if (e.basis() != Basis::Opposite) throw DomainError("psi is applied to O-basis expressions");
  SchubertExpr out(Basis::Opposite, p.name());
  for (const auto& [nu, c] : e.terms()) out.add(psi_shape(p, nu), c);
  return out;
}

SchubertExpr quantized_ideal_sheaf(const Poset& p, const Shape& mu, bool check) {
  const SchubertExpr I = ideal_sheaf(p, mu);
  // psi(I^mu) vanishes when z1 is not below mu. Otherwise the correction is
  // computed term by term: I^{mu(-1)} can have terms with no preimage.
  const bool vanishes = (p.z1() & ~mu.bits) != 0;
  if (vanishes && !check) return I;
  const SchubertExpr direct = I - psi_expr(p, I).times_q(1);
  if (vanishes && direct != I)
    throw InvariantError("quantized ideal sheaf: psi(I^mu) should vanish at " + format_shape(p, mu));
  return direct;
}

ChevalleyQuantum chevalley_quantum(const Poset& p, const Shape& mu) {
  const ChevalleyClassical cl = chevalley_classical(p, mu);
  ChevalleyQuantum out;
  out.opposite = cl.opposite - psi_expr(p, cl.opposite).times_q(1);
  out.qideal = SchubertExpr(Basis::QIdeal, p.name());
  for (const auto& [nu, c] : cl.ideal.terms()) out.qideal.add(nu, c);
  if (expand_ideal(p, out.qideal) != out.opposite)
    throw InvariantError("quantum Chevalley: the two expansions disagree at " + format_shape(p, mu));
  return out;
}

namespace {

QRational pairing_impl(const SchubertExpr& a, const std::function<unsigned(const Shape&)>& dist) {
  if (a.basis() != Basis::Opposite) throw DomainError("pairing expects an O-basis expression");
  QPoly num;
  for (const auto& [nu, c] : a.terms()) num += c.times_q(dist(nu));
  return {num, 1};
}

using Job = std::function<std::vector<VerifyFailure>(std::size_t)>;

// Runs job(i) for i in [0, n) on up to `jobs` threads; results merged in index order.
std::vector<VerifyFailure> run_indexed(std::size_t n, unsigned jobs, const Job& job) {
  std::vector<std::vector<VerifyFailure>> parts(n);
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) parts[i] = job(i);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < n; i += jobs) parts[i] = job(i);
      });
    for (auto& th : pool) th.join();
  }
  std::vector<VerifyFailure> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

}  // namespace

QRational qk_pairing(const Poset& p, const SchubertExpr& a, const Shape& lambda) {
  return pairing_impl(a, [&](const Shape& nu) { return distance(p, nu, lambda); });
}

QRational qk_pairing(const CurveTable& t, const SchubertExpr& a, const Shape& lambda) {
  return pairing_impl(a, [&](const Shape& nu) { return t.distance(nu, lambda); });
}

WeightPoly classical_pairing(const Poset& p, const SchubertExpr& a, const Shape& lambda) {
  if (a.basis() != Basis::Opposite) throw DomainError("pairing expects an O-basis expression");
  WeightPoly out;
  for (const auto& [nu, c] : a.terms()) {
    if (c.max_degree() != 0) throw DomainError("classical pairing of an expression with q terms");
    if (nu.leq(lambda)) out += c.coeff(0);
  }
  (void)p;
  return out;
}

VerifyReport verify_duality(const Poset& p, unsigned jobs) {
  const CurveTable table(p);
  const auto& shapes = table.shapes();
  const std::size_t n = shapes.size();
  std::vector<SchubertExpr> iq(n);
  for (std::size_t m = 0; m < n; ++m) iq[m] = quantized_ideal_sheaf(p, shapes[m]);
  const QPoly one_minus_q = constant(p, 1).times_one_minus_q();

  VerifyReport r{"duality", n * n, {}};
  r.failures = run_indexed(n, jobs, [&](std::size_t m) {
    std::vector<VerifyFailure> bad;
    for (std::size_t l = 0; l < n; ++l) {
      const QPoly got = qk_pairing(table, iq[m], shapes[l]).numerator;
      const QPoly want = l == m ? one_minus_q : QPoly();
      if (got != want) bad.push_back({shapes[l], shapes[m], "numerator " + format_qpoly(got)});
    }
    return bad;
  });
  return r;
}

VerifyReport verify_classical(const Poset& p, unsigned jobs) {
  const std::vector<Shape> shapes = enumerate_shapes(p);
  const std::size_t n = shapes.size();
  VerifyReport r{"classical", n * n, {}};
  r.failures = run_indexed(n, jobs, [&](std::size_t m) {
    std::vector<VerifyFailure> bad;
    const SchubertExpr I = ideal_sheaf(p, shapes[m]);
    for (std::size_t l = 0; l < n; ++l) {
      const WeightPoly got = classical_pairing(p, I, shapes[l]);
      const WeightPoly want = l == m ? WeightPoly::constant(p.roots().rank(), 1) : WeightPoly();
      if (got != want) bad.push_back({shapes[l], shapes[m], "value " + format_weight_poly(got)});
    }
    return bad;
  });
  return r;
}

VerifyReport verify_alpha(const Poset& p, unsigned jobs) {
  const std::vector<Shape> shapes = enumerate_shapes(p);
  VerifyReport r{"alpha", shapes.size(), {}};
  r.failures = run_indexed(shapes.size(), jobs, [&](std::size_t m) {
    std::vector<VerifyFailure> bad;
    if (!alpha_identity_check(p, shapes[m])) bad.push_back({shapes[m], shapes[m], "alpha identity fails"});
    return bad;
  });
  return r;
}

VerifyReport verify_branch_law(const Poset& p) {
  const std::vector<Shape> shapes = enumerate_shapes(p);
  VerifyReport r{"branch", shapes.size(), {}};
  for (const Shape& mu : shapes) {
    const SchubertExpr image = psi_expr(p, ideal_sheaf(p, mu));
    const bool z1_in = (p.z1() & ~mu.bits) == 0;
    if (image.is_zero() == z1_in) {
      r.failures.push_back({mu, mu, z1_in ? "psi(I) vanishes although z1 <= mu" : "psi(I) nonzero although z1 not <= mu"});
    } else if (z1_in && image != ideal_sheaf(p, psi_shape(p, mu))) {
      r.failures.push_back({mu, mu, "psi(I^mu) differs from I^{mu(-1)}"});
    }
  }
  return r;
}

VerifyReport verify_lemma_weight(const Poset& p, std::size_t samples, unsigned seed) {
  const std::vector<Shape> shapes = enumerate_shapes(p);
  VerifyReport r{"lemma-weight", 0, {}};
  auto check = [&](const Shape& u, const Shape& v, const Shape& w) {
    ++r.checked;
    if (sqrtJ(p, u, v) * sqrtJ(p, v, w) / J(p, v) != sqrtJ(p, u, w))
      r.failures.push_back({u, w, "chain through " + format_shape(p, v)});
  };
  if (samples == 0) {
    for (const Shape& u : shapes)
      for (const Shape& v : shapes) {
        if (!u.leq(v)) continue;
        for (const Shape& w : shapes)
          if (v.leq(w)) check(u, v, w);
      }
    return r;
  }
  std::mt19937_64 rng(seed);
  auto below = [&](const Shape& top) {
    std::vector<const Shape*> c;
    for (const Shape& s : shapes)
      if (s.leq(top)) c.push_back(&s);
    return *c[std::uniform_int_distribution<std::size_t>(0, c.size() - 1)(rng)];
  };
  for (std::size_t i = 0; i < samples; ++i) {
    const Shape w = shapes[std::uniform_int_distribution<std::size_t>(0, shapes.size() - 1)(rng)];
    const Shape v = below(w);
    const Shape u = below(v);
    check(u, v, w);
  }
  return r;
}

}  // namespace qkc
