#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "core/field.hpp"

namespace reeseq {

constexpr int kMaxVars = 12;
constexpr uint32_t kMaxExponent = 65535;

// Exponent vector with cached total degree.  Slots beyond nv are zero.
struct Monomial {
    std::array<uint16_t, kMaxVars> e{};
    int16_t nv = 0;
    int32_t deg = 0;

    static Monomial one(int nvars) {
        Monomial m;
        m.nv = static_cast<int16_t>(nvars);
        return m;
    }
    bool is_one() const { return deg == 0; }
    bool operator==(const Monomial& o) const { return nv == o.nv && e == o.e; }

    bool divides(const Monomial& o) const {
        for (int i = 0; i < nv; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    bool coprime(const Monomial& o) const {
        for (int i = 0; i < nv; ++i)
            if (e[i] && o.e[i]) return false;
        return true;
    }
};

Monomial mon_mul(const Monomial& a, const Monomial& b);
Monomial mon_div(const Monomial& a, const Monomial& b);  // assumes b | a
Monomial mon_lcm(const Monomial& a, const Monomial& b);

enum class OrderKind : uint8_t { Grevlex, Lex, Block, TdegGrevlex };

// Monomial order.  Block orders compare consecutive variable ranges in
// sequence; a leading block of eliminated variables gives an elimination
// order.  TdegGrevlex compares total degree in the T-variables first and
// refines by grevlex (the standard bigraded order on S = R[T]).
struct MonomialOrder {
    OrderKind kind = OrderKind::Grevlex;
    std::vector<std::pair<int, int>> blocks;    // [begin,end) ranges
    std::vector<OrderKind> block_kinds;         // Grevlex or Lex per block

    static MonomialOrder grevlex() { return MonomialOrder{}; }
    static MonomialOrder lex() { return MonomialOrder{OrderKind::Lex, {}, {}}; }
    static MonomialOrder elim_block(int split, OrderKind front = OrderKind::Grevlex,
                                    OrderKind back = OrderKind::Grevlex, int nvars = 0);
    static MonomialOrder tdeg_grevlex() { return MonomialOrder{OrderKind::TdegGrevlex, {}, {}}; }

    bool operator==(const MonomialOrder& o) const {
        return kind == o.kind && blocks == o.blocks && block_kinds == o.block_kinds;
    }
};

enum class VarClass : uint8_t { X, T, Aux };

struct Ring;
using RingPtr = std::shared_ptr<const Ring>;

struct Ring {
    Field field;
    std::vector<std::string> names;
    std::vector<VarClass> cls;
    MonomialOrder order;

    int nvars() const { return static_cast<int>(names.size()); }
    int index_of(const std::string& name) const;  // -1 if absent
    int count_class(VarClass c) const;

    // cmp > 0 iff a > b in this ring's order.
    int cmp(const Monomial& a, const Monomial& b) const;
    int cmp_with(const MonomialOrder& ord, const Monomial& a, const Monomial& b) const;

    // (x-degree, T-degree) of a monomial; Aux variables are excluded.
    std::pair<int, int> bidegree(const Monomial& m) const;

    bool same_vars(const Ring& o) const { return names == o.names && cls == o.cls; }
    bool compatible(const Ring& o) const {
        return field.equal(o.field) && same_vars(o) && order == o.order;
    }

    static RingPtr make(Field f, std::vector<std::string> names, std::vector<VarClass> cls,
                        MonomialOrder order = MonomialOrder::grevlex());
    // Polynomial ring in x-variables only.
    static RingPtr poly_ring(Field f, const std::vector<std::string>& xnames,
                             MonomialOrder order = MonomialOrder::grevlex());
};

// S = base[T1..Tk]: x-variables of base first, then k T-variables.
RingPtr extend_T(const RingPtr& base, int count, const std::string& prefix = "T");

// Ring with extra variables prepended (as Aux) and a block elimination
// order: the new variables dominate, the remaining block keeps `inner`.
RingPtr prepend_aux(const RingPtr& base, const std::vector<std::string>& aux,
                    OrderKind inner = OrderKind::Grevlex);

// Ring spanned by a subset of variables (original relative order kept).
RingPtr subring(const RingPtr& base, const std::vector<int>& keep,
                MonomialOrder order = MonomialOrder::grevlex());

// Same variables, different order.
RingPtr with_order(const RingPtr& base, MonomialOrder order);
RingPtr with_field(const RingPtr& base, Field f);

// All monomials of total degree d in the index range [lo, hi), listed in
// descending lex on that range: v_lo^d first, v_{hi-1}^d last.
std::vector<Monomial> monomials_of_degree(const RingPtr& ring, int d, int lo, int hi);

}  // namespace reeseq
