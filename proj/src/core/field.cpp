#include "core/field.hpp"

#include "core/errors.hpp"

namespace reeseq {

Field Field::prime_field(uint32_t p) {
    if (p < 2) throw input_error("prime field characteristic must be >= 2");
    for (uint64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) throw input_error("field characteristic " + std::to_string(p) + " is not prime");
    return Field{p};
}

mpq_class Field::normalize(const mpq_class& a) const {
    if (p == 0) {
        mpq_class r = a;
        r.canonicalize();
        return r;
    }
    // GF(p): value must be representable as n/d with d invertible mod p.
    mpz_class den = a.get_den();
    mpz_class num = a.get_num();
    mpz_class pz(p);
    mpz_class dmod = den % pz;
    if (dmod == 0) throw input_error("denominator divisible by field characteristic");
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), dmod.get_mpz_t(), pz.get_mpz_t()) == 0)
        throw input_error("denominator not invertible mod p");
    mpz_class r = (num % pz) * dinv % pz;
    if (r < 0) r += pz;
    return mpq_class(r);
}

mpq_class Field::add(const mpq_class& a, const mpq_class& b) const {
    if (p == 0) return a + b;
    mpz_class r = a.get_num() + b.get_num();
    if (r >= p) r -= p;
    return mpq_class(r);
}

mpq_class Field::sub(const mpq_class& a, const mpq_class& b) const {
    if (p == 0) return a - b;
    mpz_class r = a.get_num() - b.get_num();
    if (r < 0) r += p;
    return mpq_class(r);
}

mpq_class Field::mul(const mpq_class& a, const mpq_class& b) const {
    if (p == 0) return a * b;
    mpz_class r = a.get_num() * b.get_num() % mpz_class(p);
    return mpq_class(r);
}

mpq_class Field::neg(const mpq_class& a) const {
    if (p == 0) return -a;
    if (a == 0) return a;
    return mpq_class(mpz_class(p) - a.get_num());
}

mpq_class Field::inv(const mpq_class& a) const {
    if (a == 0) throw input_error("division by zero");
    if (p == 0) return 1 / a;
    mpz_class r, pz(p);
    mpz_class num = a.get_num();
    if (mpz_invert(r.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t()) == 0)
        throw input_error("element not invertible mod p");
    if (r < 0) r += pz;
    return mpq_class(r);
}

mpq_class Field::div(const mpq_class& a, const mpq_class& b) const {
    return mul(a, inv(b));
}

std::string Field::str() const {
    return p == 0 ? "Q" : "GF(" + std::to_string(p) + ")";
}

}  // namespace reeseq
