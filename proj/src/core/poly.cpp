#include "core/poly.hpp"

#include <algorithm>
#include <sstream>

#include "core/errors.hpp"

namespace reeseq {

Poly Poly::constant(const RingPtr& r, const mpq_class& c) {
    Poly p(r);
    mpq_class cc = r->field.normalize(c);
    if (cc != 0) p.t_.push_back({Monomial::one(r->nvars()), cc});
    return p;
}

Poly Poly::variable(const RingPtr& r, int idx, int exp) {
    if (idx < 0 || idx >= r->nvars()) throw input_error("variable index out of range");
    if (exp < 0) throw input_error("negative exponent");
    Poly p(r);
    if (exp > static_cast<int>(kMaxExponent)) throw input_error("monomial exponent overflow");
    Monomial m = Monomial::one(r->nvars());
    m.e[idx] = static_cast<uint16_t>(exp);
    m.deg = exp;
    p.t_.push_back({m, mpq_class(1)});
    return p;
}

Poly Poly::term(const RingPtr& r, const Monomial& m, const mpq_class& c) {
    Poly p(r);
    mpq_class cc = r->field.normalize(c);
    if (cc != 0) p.t_.push_back({m, cc});
    return p;
}

Poly Poly::from_terms(const RingPtr& r, std::vector<Term> terms) {
    Poly p(r);
    p.t_ = std::move(terms);
    for (auto& t : p.t_) t.c = r->field.normalize(t.c);
    p.normalize_sorted();
    return p;
}

void Poly::normalize_sorted() {
    const Ring& R = *ring_;
    std::sort(t_.begin(), t_.end(),
              [&R](const Term& a, const Term& b) { return R.cmp(a.m, b.m) > 0; });
    std::vector<Term> out;
    out.reserve(t_.size());
    for (auto& t : t_) {
        if (!out.empty() && out.back().m == t.m) {
            out.back().c = R.field.add(out.back().c, t.c);
            if (out.back().c == 0) out.pop_back();
        } else if (t.c != 0) {
            out.push_back(std::move(t));
        }
    }
    t_ = std::move(out);
}

Poly Poly::operator+(const Poly& o) const {
    if (!ring_->compatible(*o.ring_)) throw input_error("ring mismatch in +");
    Poly r(ring_);
    const Ring& R = *ring_;
    r.t_.reserve(t_.size() + o.t_.size());
    size_t i = 0, j = 0;
    while (i < t_.size() && j < o.t_.size()) {
        int c = R.cmp(t_[i].m, o.t_[j].m);
        if (c > 0) {
            r.t_.push_back(t_[i++]);
        } else if (c < 0) {
            r.t_.push_back(o.t_[j++]);
        } else {
            mpq_class s = R.field.add(t_[i].c, o.t_[j].c);
            if (s != 0) r.t_.push_back({t_[i].m, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < t_.size(); ++i) r.t_.push_back(t_[i]);
    for (; j < o.t_.size(); ++j) r.t_.push_back(o.t_[j]);
    return r;
}

Poly Poly::operator-() const {
    Poly r(ring_);
    r.t_.reserve(t_.size());
    for (auto& t : t_) r.t_.push_back({t.m, ring_->field.neg(t.c)});
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::mul_scalar(const mpq_class& c) const {
    mpq_class cc = ring_->field.normalize(c);
    Poly r(ring_);
    if (cc == 0) return r;
    r.t_.reserve(t_.size());
    for (auto& t : t_) r.t_.push_back({t.m, ring_->field.mul(t.c, cc)});
    return r;
}

Poly Poly::mul_mon(const Monomial& m, const mpq_class& c) const {
    mpq_class cc = ring_->field.normalize(c);
    Poly r(ring_);
    if (cc == 0) return r;
    r.t_.reserve(t_.size());
    for (auto& t : t_) r.t_.push_back({mon_mul(t.m, m), ring_->field.mul(t.c, cc)});
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (!ring_->compatible(*o.ring_)) throw input_error("ring mismatch in *");
    Poly r(ring_);
    if (is_zero() || o.is_zero()) return r;
    r.t_.reserve(t_.size() * o.t_.size());
    for (auto& a : t_)
        for (auto& b : o.t_) r.t_.push_back({mon_mul(a.m, b.m), ring_->field.mul(a.c, b.c)});
    r.normalize_sorted();
    return r;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw input_error("negative power");
    Poly r = Poly::constant(ring_, 1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = (e >>= 1) ? base * base : base;
    }
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (t_.size() != o.t_.size()) return false;
    for (size_t i = 0; i < t_.size(); ++i)
        if (!(t_[i].m == o.t_[i].m) || t_[i].c != o.t_[i].c) return false;
    return true;
}

void Poly::sub_mul(const mpq_class& c, const Monomial& m, const Poly& g) {
    const Ring& R = *ring_;
    std::vector<Term> out;
    out.reserve(t_.size() + g.t_.size());
    size_t i = 0, j = 0;
    while (i < t_.size() && j < g.t_.size()) {
        Monomial gm = mon_mul(g.t_[j].m, m);
        int cv = R.cmp(t_[i].m, gm);
        if (cv > 0) {
            out.push_back(std::move(t_[i++]));
        } else if (cv < 0) {
            out.push_back({gm, R.field.neg(R.field.mul(c, g.t_[j].c))});
            ++j;
        } else {
            mpq_class s = R.field.sub(t_[i].c, R.field.mul(c, g.t_[j].c));
            if (s != 0) out.push_back({t_[i].m, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < t_.size(); ++i) out.push_back(std::move(t_[i]));
    for (; j < g.t_.size(); ++j) {
        out.push_back({mon_mul(g.t_[j].m, m), R.field.neg(R.field.mul(c, g.t_[j].c))});
    }
    t_ = std::move(out);
}

int Poly::degree() const {
    int d = -1;
    for (auto& t : t_) d = std::max(d, t.m.deg);
    return d;
}

bool Poly::is_homogeneous() const {
    for (auto& t : t_)
        if (t.m.deg != t_.front().m.deg) return false;
    return true;
}

bool Poly::is_bihomogeneous() const {
    if (t_.empty()) return true;
    auto b0 = ring_->bidegree(t_.front().m);
    for (auto& t : t_)
        if (ring_->bidegree(t.m) != b0) return false;
    return true;
}

std::pair<int, int> Poly::bidegree() const {
    if (t_.empty()) throw input_error("bidegree of zero polynomial");
    if (!is_bihomogeneous()) throw input_error("polynomial is not bihomogeneous");
    return ring_->bidegree(t_.front().m);
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return mul_scalar(ring_->field.inv(lc()));
}

Poly Poly::primitive() const {
    if (is_zero()) return *this;
    if (!ring_->field.is_rationals()) return monic();
    mpz_class num_gcd = 0, den_lcm = 1;
    for (auto& t : t_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den().get_mpz_t());
    }
    mpq_class scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (lc() < 0) scale = -scale;
    return mul_scalar(scale);
}

Poly Poly::substitute(const RingPtr& target, const std::vector<std::optional<Poly>>& images) const {
    Poly acc = Poly::zero(target);
    for (auto& t : t_) {
        Poly prod = Poly::constant(target, t.c);
        for (int i = 0; i < t.m.nv; ++i) {
            if (t.m.e[i] == 0) continue;
            if (!images[i]) throw input_error("substitute: no image for variable " + ring_->names[i]);
            prod = prod * images[i]->pow(t.m.e[i]);
        }
        acc = acc + prod;
    }
    return acc;
}

Poly Poly::transport(const RingPtr& target) const {
    std::vector<int> map(ring_->nvars(), -1);
    for (int i = 0; i < ring_->nvars(); ++i) map[i] = target->index_of(ring_->names[i]);
    std::vector<Term> out;
    out.reserve(t_.size());
    for (auto& t : t_) {
        Monomial m = Monomial::one(target->nvars());
        for (int i = 0; i < t.m.nv; ++i) {
            if (t.m.e[i] == 0) continue;
            if (map[i] < 0)
                throw input_error("transport: variable " + ring_->names[i] + " missing in target ring");
            m.e[map[i]] = t.m.e[i];
        }
        m.deg = t.m.deg;
        out.push_back({m, t.c});
    }
    return Poly::from_terms(target, std::move(out));
}

namespace {
std::vector<std::pair<Monomial, Poly>> group_by(const Poly& p, bool by_T) {
    const RingPtr& r = p.ring();
    std::vector<std::pair<Monomial, std::vector<Term>>> groups;
    for (auto& t : p.terms()) {
        Monomial key = Monomial::one(r->nvars());
        Monomial rest = Monomial::one(r->nvars());
        for (int i = 0; i < t.m.nv; ++i) {
            bool in_key = by_T ? r->cls[i] == VarClass::T : r->cls[i] == VarClass::X;
            Monomial& dst = in_key ? key : rest;
            dst.e[i] = t.m.e[i];
            dst.deg += t.m.e[i];
        }
        bool found = false;
        for (auto& g : groups)
            if (g.first == key) {
                g.second.push_back({rest, t.c});
                found = true;
                break;
            }
        if (!found) groups.push_back({key, {{rest, t.c}}});
    }
    std::sort(groups.begin(), groups.end(),
              [&](auto& a, auto& b) { return r->cmp(a.first, b.first) > 0; });
    std::vector<std::pair<Monomial, Poly>> out;
    out.reserve(groups.size());
    for (auto& g : groups) out.push_back({g.first, Poly::from_terms(r, std::move(g.second))});
    return out;
}
}  // namespace

std::vector<std::pair<Monomial, Poly>> Poly::coefficients_by_T() const {
    return group_by(*this, true);
}

std::vector<std::pair<Monomial, Poly>> Poly::coefficients_by_x() const {
    return group_by(*this, false);
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
    if (divisor.is_zero()) throw input_error("division by zero polynomial");
    Poly rem = *this;
    Poly quot(ring_);
    const Ring& R = *ring_;
    while (!rem.is_zero()) {
        if (!divisor.lm().divides(rem.lm())) return std::nullopt;
        mpq_class c = R.field.div(rem.lc(), divisor.lc());
        Monomial m = mon_div(rem.lm(), divisor.lm());
        quot.t_.push_back({m, c});
        rem.sub_mul(c, m, divisor);
    }
    quot.normalize_sorted();
    return quot;
}

std::string Poly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& t : t_) {
        mpq_class c = t.c;
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        mpq_class ac = neg ? mpq_class(-c) : c;
        bool coeff_one = (ac == 1);
        bool has_mon = !t.m.is_one();
        if (!coeff_one || !has_mon) os << ac.get_str();
        if (has_mon) {
            bool need_star = !coeff_one;
            for (int i = 0; i < t.m.nv; ++i) {
                if (t.m.e[i] == 0) continue;
                if (need_star) os << "*";
                os << ring_->names[i];
                if (t.m.e[i] > 1) os << "^" << t.m.e[i];
                need_star = true;
            }
        }
    }
    return os.str();
}

int cmp_poly(const Poly& a, const Poly& b) {
    const Ring& R = *a.ring();
    size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        int c = R.cmp(a.terms()[i].m, b.terms()[i].m);
        if (c != 0) return c;
    }
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = 0; i < n; ++i) {
        int c = cmp(a.terms()[i].c, b.terms()[i].c);
        if (c != 0) return c;
    }
    return 0;
}

int total_degree(const std::vector<Poly>& ps) {
    int d = -1;
    for (auto& p : ps) d = std::max(d, p.degree());
    return d;
}

}  // namespace reeseq
