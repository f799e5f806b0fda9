#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace reeseq {

// Coefficient field: the rationals (p == 0) or the prime field GF(p).
// Scalars are mpq_class values; in GF(p) mode they are integers in [0, p).
struct Field {
    uint32_t p = 0;

    bool is_rationals() const { return p == 0; }

    static Field rationals() { return Field{0}; }
    static Field prime_field(uint32_t p);

    // Reduce an arbitrary rational into canonical form for this field.
    mpq_class normalize(const mpq_class& a) const;

    mpq_class add(const mpq_class& a, const mpq_class& b) const;
    mpq_class sub(const mpq_class& a, const mpq_class& b) const;
    mpq_class mul(const mpq_class& a, const mpq_class& b) const;
    mpq_class neg(const mpq_class& a) const;
    mpq_class inv(const mpq_class& a) const;
    mpq_class div(const mpq_class& a, const mpq_class& b) const;

    bool equal(const Field& o) const { return p == o.p; }
    std::string str() const;
};

}  // namespace reeseq
