#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/ring.hpp"

namespace reeseq {

struct Term {
    Monomial m;
    mpq_class c;
};

// Sparse multivariate polynomial.  Terms are kept sorted descending in the
// ring's order, with no zero coefficients; coefficients are canonical for
// the ring's field.
class Poly {
  public:
    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly zero(const RingPtr& r) { return Poly(r); }
    static Poly constant(const RingPtr& r, const mpq_class& c);
    static Poly variable(const RingPtr& r, int idx, int exp = 1);
    static Poly from_terms(const RingPtr& r, std::vector<Term> terms);  // normalizes
    static Poly term(const RingPtr& r, const Monomial& m, const mpq_class& c);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }

    const Monomial& lm() const { return t_.front().m; }
    const mpq_class& lc() const { return t_.front().c; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly mul_scalar(const mpq_class& c) const;
    Poly mul_mon(const Monomial& m, const mpq_class& c) const;
    Poly pow(int e) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // In-place this -= c * m * g (the reduction kernel).
    void sub_mul(const mpq_class& c, const Monomial& m, const Poly& g);

    // Total degree (max over terms); -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    // (x-degree, T-degree); throws unless bihomogeneous.
    std::pair<int, int> bidegree() const;
    bool is_bihomogeneous() const;

    Poly monic() const;
    // Unit-normalized canonical form: integer coefficients with content 1
    // and positive leading coefficient (over GF(p): monic).
    Poly primitive() const;

    // Substitute variables by polynomials over a target ring.  images[i] is
    // the image of variable i; every variable occurring must have an image.
    Poly substitute(const RingPtr& target, const std::vector<std::optional<Poly>>& images) const;

    // Re-express in another ring matching variables by name.  Fails if a
    // variable with a nonzero exponent is missing in the target.
    Poly transport(const RingPtr& target) const;

    // Group terms by their T-monomial part: T-monomial -> coefficient in the
    // x-variables (returned as polys in this ring).
    std::vector<std::pair<Monomial, Poly>> coefficients_by_T() const;
    // Group terms by their x-monomial part.
    std::vector<std::pair<Monomial, Poly>> coefficients_by_x() const;

    // Exact division: returns quotient if divisor divides exactly.
    std::optional<Poly> divide_exact(const Poly& divisor) const;

    std::string str() const;

  private:
    RingPtr ring_;
    std::vector<Term> t_;

    void normalize_sorted();  // t_ sorted, combine equals, drop zeros
};

// Deterministic total order on polynomials of one ring (leading monomials
// first, then remaining term lists, then coefficients).
int cmp_poly(const Poly& a, const Poly& b);

int total_degree(const std::vector<Poly>& ps);

}  // namespace reeseq
