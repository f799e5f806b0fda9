#include "core/ring.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace reeseq {

Monomial mon_mul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (int i = 0; i < a.nv; ++i) {
        uint32_t s = static_cast<uint32_t>(a.e[i]) + b.e[i];
        if (s > kMaxExponent) throw input_error("monomial exponent overflow");
        r.e[i] = static_cast<uint16_t>(s);
    }
    r.deg = a.deg + b.deg;
    return r;
}

Monomial mon_div(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (int i = 0; i < a.nv; ++i) r.e[i] = static_cast<uint16_t>(a.e[i] - b.e[i]);
    r.deg = a.deg - b.deg;
    return r;
}

Monomial mon_lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    r.deg = 0;
    for (int i = 0; i < a.nv; ++i) {
        r.e[i] = std::max(a.e[i], b.e[i]);
        r.deg += r.e[i];
    }
    return r;
}

MonomialOrder MonomialOrder::elim_block(int split, OrderKind front, OrderKind back, int nvars) {
    MonomialOrder o;
    o.kind = OrderKind::Block;
    o.blocks = {{0, split}, {split, nvars}};
    o.block_kinds = {front, back};
    return o;
}

int Ring::index_of(const std::string& name) const {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

int Ring::count_class(VarClass c) const {
    int n = 0;
    for (auto v : cls)
        if (v == c) ++n;
    return n;
}

namespace {

int cmp_grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
    int da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
        da += a.e[i];
        db += b.e[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (int i = hi - 1; i >= lo; --i) {
        int d = static_cast<int>(a.e[i]) - b.e[i];
        if (d != 0) return d < 0 ? 1 : -1;
    }
    return 0;
}

int cmp_lex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
    for (int i = lo; i < hi; ++i) {
        int d = static_cast<int>(a.e[i]) - b.e[i];
        if (d != 0) return d < 0 ? -1 : 1;
    }
    return 0;
}

}  // namespace

int Ring::cmp_with(const MonomialOrder& ord, const Monomial& a, const Monomial& b) const {
    const int n = nvars();
    switch (ord.kind) {
        case OrderKind::Grevlex:
            if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
            return cmp_grevlex_range(a, b, 0, n);
        case OrderKind::Lex:
            return cmp_lex_range(a, b, 0, n);
        case OrderKind::TdegGrevlex: {
            int ta = 0, tb = 0;
            for (int i = 0; i < n; ++i)
                if (cls[i] == VarClass::T) {
                    ta += a.e[i];
                    tb += b.e[i];
                }
            if (ta != tb) return ta < tb ? -1 : 1;
            if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
            return cmp_grevlex_range(a, b, 0, n);
        }
        case OrderKind::Block:
            for (size_t k = 0; k < ord.blocks.size(); ++k) {
                auto [lo, hi] = ord.blocks[k];
                int c = ord.block_kinds[k] == OrderKind::Lex ? cmp_lex_range(a, b, lo, hi)
                                                             : cmp_grevlex_range(a, b, lo, hi);
                if (c != 0) return c;
            }
            return 0;
    }
    return 0;
}

int Ring::cmp(const Monomial& a, const Monomial& b) const { return cmp_with(order, a, b); }

std::pair<int, int> Ring::bidegree(const Monomial& m) const {
    int x = 0, t = 0;
    for (int i = 0; i < m.nv; ++i) {
        if (cls[i] == VarClass::X) x += m.e[i];
        else if (cls[i] == VarClass::T) t += m.e[i];
    }
    return {x, t};
}

RingPtr Ring::make(Field f, std::vector<std::string> names, std::vector<VarClass> cls,
                   MonomialOrder order) {
    if (names.size() != cls.size()) throw input_error("ring: names/classes length mismatch");
    if (static_cast<int>(names.size()) > kMaxVars)
        throw input_error("ring: too many variables (max " + std::to_string(kMaxVars) + ")");
    for (size_t i = 0; i < names.size(); ++i)
        for (size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j]) throw input_error("ring: duplicate variable " + names[i]);
    auto r = std::make_shared<Ring>();
    r->field = f;
    r->names = std::move(names);
    r->cls = std::move(cls);
    r->order = std::move(order);
    return r;
}

RingPtr Ring::poly_ring(Field f, const std::vector<std::string>& xnames, MonomialOrder order) {
    return make(f, xnames, std::vector<VarClass>(xnames.size(), VarClass::X), order);
}

RingPtr extend_T(const RingPtr& base, int count, const std::string& prefix) {
    auto names = base->names;
    auto cls = base->cls;
    for (int i = 1; i <= count; ++i) {
        names.push_back(prefix + std::to_string(i));
        cls.push_back(VarClass::T);
    }
    return Ring::make(base->field, std::move(names), std::move(cls), base->order);
}

RingPtr prepend_aux(const RingPtr& base, const std::vector<std::string>& aux, OrderKind inner) {
    std::vector<std::string> names = aux;
    names.insert(names.end(), base->names.begin(), base->names.end());
    std::vector<VarClass> cls(aux.size(), VarClass::Aux);
    cls.insert(cls.end(), base->cls.begin(), base->cls.end());
    int n = static_cast<int>(names.size());
    auto order = MonomialOrder::elim_block(static_cast<int>(aux.size()), OrderKind::Grevlex, inner, n);
    return Ring::make(base->field, std::move(names), std::move(cls), std::move(order));
}

RingPtr subring(const RingPtr& base, const std::vector<int>& keep, MonomialOrder order) {
    std::vector<std::string> names;
    std::vector<VarClass> cls;
    for (int i : keep) {
        names.push_back(base->names[i]);
        cls.push_back(base->cls[i]);
    }
    return Ring::make(base->field, std::move(names), std::move(cls), std::move(order));
}

RingPtr with_order(const RingPtr& base, MonomialOrder order) {
    return Ring::make(base->field, base->names, base->cls, std::move(order));
}

RingPtr with_field(const RingPtr& base, Field f) {
    return Ring::make(f, base->names, base->cls, base->order);
}

namespace {
void enum_rec(int d, int lo, int hi, int pos, Monomial& cur, std::vector<Monomial>& out) {
    if (pos == hi - 1) {
        cur.e[pos] = static_cast<uint16_t>(d);
        cur.deg += d;
        out.push_back(cur);
        cur.deg -= d;
        cur.e[pos] = 0;
        return;
    }
    for (int k = d; k >= 0; --k) {
        cur.e[pos] = static_cast<uint16_t>(k);
        cur.deg += k;
        enum_rec(d - k, lo, hi, pos + 1, cur, out);
        cur.deg -= k;
        cur.e[pos] = 0;
    }
}
}  // namespace

std::vector<Monomial> monomials_of_degree(const RingPtr& ring, int d, int lo, int hi) {
    std::vector<Monomial> out;
    if (hi <= lo) {
        if (d == 0) out.push_back(Monomial::one(ring->nvars()));
        return out;
    }
    Monomial cur = Monomial::one(ring->nvars());
    enum_rec(d, lo, hi, lo, cur, out);
    return out;
}

}  // namespace reeseq
