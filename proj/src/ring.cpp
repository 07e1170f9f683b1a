#include "cycsch/ring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace cycsch {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long i = 2; i * i <= p; ++i)
        if (p % i == 0) return false;
    return true;
}

// q = p^e with p prime, or returns false.
bool prime_power(long q, long& p, long& e) {
    if (q < 2) return false;
    for (long cand = 2; cand * cand <= q; ++cand) {
        if (q % cand) continue;
        p = cand;
        e = 0;
        long m = q;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        return m == 1;
    }
    p = q;
    e = 1;
    return true;
}

// Polynomials over F_p as coefficient vectors, constant term first.
using Poly = std::vector<int>;

Poly poly_mod(const Poly& a, const Poly& m, long p) {
    Poly r = a;
    while (r.size() >= m.size()) {
        int lead = r.back();
        if (lead) {
            // m is monic
            std::size_t shift = r.size() - m.size();
            for (std::size_t i = 0; i < m.size(); ++i) {
                int& c = r[shift + i];
                c = static_cast<int>(((c - static_cast<long>(lead) * m[i]) % p + p) % p);
            }
        }
        r.pop_back();
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

bool divides(const Poly& d, const Poly& f, long p) {
    return poly_mod(f, d, p).empty();
}

bool irreducible_mod_p(const Poly& f, long p) {
    // trial division by all monic polynomials of degree 1..deg/2
    long deg = static_cast<long>(f.size()) - 1;
    for (long dd = 1; dd <= deg / 2; ++dd) {
        long count = 1;
        for (long i = 0; i < dd; ++i) count *= p;
        for (long code = 0; code < count; ++code) {
            Poly cand(static_cast<std::size_t>(dd) + 1);
            long c = code;
            for (long i = 0; i < dd; ++i) {
                cand[static_cast<std::size_t>(i)] = static_cast<int>(c % p);
                c /= p;
            }
            cand[static_cast<std::size_t>(dd)] = 1;
            if (divides(cand, f, p)) return false;
        }
    }
    return true;
}

// Lexicographically smallest monic irreducible of degree r over F_p,
// comparing coefficient tuples (c_0,...,c_{r-1}).
Poly min_irreducible(long p, long r) {
    if (r == 1) return {0, 1};  // f = X; any monic linear works, X is smallest
    std::vector<int> c(static_cast<std::size_t>(r), 0);
    for (;;) {
        Poly f(c.begin(), c.end());
        f.push_back(1);
        if (irreducible_mod_p(f, p)) return f;
        // lexicographic successor: last coordinate is least significant
        long i = r - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == p - 1) c[static_cast<std::size_t>(i--)] = 0;
        require(i >= 0, errc::internal, "no irreducible polynomial found");
        ++c[static_cast<std::size_t>(i)];
    }
}

}  // namespace

std::string RingSpec::to_string() const {
    switch (kind) {
        case Kind::zmod:
            return "Z/" + std::to_string(n);
        case Kind::galois: {
            if (d == 1) {
                long q = 1;
                for (long i = 0; i < r; ++i) q *= p;
                return "GF(" + std::to_string(q) + ")";
            }
            return "GR(" + std::to_string(p) + "^" + std::to_string(d) + "," + std::to_string(r) + ")";
        }
        case Kind::trunc_poly:
            return "POLY(" + std::to_string(q) + "," + std::to_string(n) + ")";
        case Kind::product: {
            std::string s;
            for (std::size_t i = 0; i < factors.size(); ++i) {
                if (i) s += "*";
                s += factors[i].to_string();
            }
            return s;
        }
        case Kind::quotient:
        case Kind::opaque:
            return label;
    }
    return label;
}

bool Ideal::contains(int x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
}

int FiniteRing::pow(int a, long e) const {
    require(e >= 0, errc::invalid, "negative exponent");
    int result = one_;
    int base = a;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

int FiniteRing::int_embed(long k) const {
    long c = structure_.characteristic;
    long m = ((k % c) + c) % c;
    int x = zero_;
    for (long i = 0; i < m; ++i) x = add(x, one_);
    return x;
}

std::optional<int> FiniteRing::inv(int a) const {
    int i = structure_.inverse[static_cast<std::size_t>(a)];
    if (i < 0) return std::nullopt;
    return i;
}

std::optional<int> FiniteRing::element_by_name(const std::string& name) const {
    for (int i = 0; i < n_; ++i)
        if (names_[static_cast<std::size_t>(i)] == name) return i;
    return std::nullopt;
}

RingPtr FiniteRing::factor(int i) const {
    require(!factors_.empty(), errc::invalid, "ring is not a product");
    require(i >= 0 && i < static_cast<int>(factors_.size()), errc::invalid, "factor index out of range");
    return factors_[static_cast<std::size_t>(i)];
}

int FiniteRing::project(int i, int x) const {
    require(!factors_.empty(), errc::invalid, "ring is not a product");
    long stride = factor_strides_[static_cast<std::size_t>(i)];
    return static_cast<int>((x / stride) % factors_[static_cast<std::size_t>(i)]->size());
}

int FiniteRing::embed_add(int i, int x) const {
    require(!factors_.empty(), errc::invalid, "ring is not a product");
    return static_cast<int>(x * factor_strides_[static_cast<std::size_t>(i)]);
}

int FiniteRing::embed_mult(int i, int x) const {
    require(!factors_.empty(), errc::invalid, "ring is not a product");
    long idx = 0;
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        int comp = (static_cast<int>(j) == i) ? x : factors_[j]->one();
        idx += comp * factor_strides_[j];
    }
    return static_cast<int>(idx);
}

void FiniteRing::finish_init() {
    require(n_ >= 2, errc::invalid, "ring must have at least two elements");
    require(zero_ != one_, errc::invalid, "trivial ring (0 = 1)");
    const std::size_t n = static_cast<std::size_t>(n_);

    neg_.assign(n, 0);
    for (int a = 0; a < n_; ++a) {
        bool found = false;
        for (int b = 0; b < n_; ++b)
            if (add(a, b) == zero_) {
                neg_[static_cast<std::size_t>(a)] = static_cast<std::uint16_t>(b);
                found = true;
                break;
            }
        require(found, errc::internal, "element without additive inverse");
    }

    RingStructure& s = structure_;
    s.inverse.assign(n, -1);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (mul(a, b) == one_) {
                s.inverse[static_cast<std::size_t>(a)] = b;
                break;
            }
    for (int a = 0; a < n_; ++a)
        if (s.inverse[static_cast<std::size_t>(a)] >= 0) s.units.push_back(a);

    // radical = nilpotent elements (finite commutative ring)
    for (int a = 0; a < n_; ++a) {
        int x = a;
        bool nil = (a == zero_);
        for (int step = 0; step < n_ && !nil; ++step) {
            x = mul(x, a);
            if (x == zero_) nil = true;
        }
        if (nil) s.radical.push_back(a);
    }

    // characteristic = additive order of 1
    {
        int x = one_;
        int c = 1;
        while (x != zero_) {
            x = add(x, one_);
            ++c;
        }
        s.characteristic = c;
    }

    // local iff the non-units are exactly the radical
    s.is_local = (s.units.size() + s.radical.size() == n);
    if (s.is_local) {
        s.residue_field_size = n_ / static_cast<int>(s.radical.size());
        const long q = s.residue_field_size;
        for (int u : s.units)
            if (pow(u, q - 1) == one_) s.teichmuller.push_back(u);
        require(static_cast<long>(s.teichmuller.size()) == q - 1, errc::internal,
                "Teichmuller subgroup has unexpected order");
    }

    for (int x : s.radical) {
        bool annihilates = true;
        for (int y : s.radical)
            if (mul(x, y) != zero_) {
                annihilates = false;
                break;
            }
        if (annihilates) s.socle.push_back(x);
    }

    for (int r : s.radical) s.principal_units.push_back(add(one_, r));
    std::sort(s.principal_units.begin(), s.principal_units.end());
    for (int r : s.socle) s.socle_units.push_back(add(one_, r));
    std::sort(s.socle_units.begin(), s.socle_units.end());
}

RingPtr make_from_tables(RingSpec spec, int n, std::vector<std::uint16_t> add,
                         std::vector<std::uint16_t> mul, std::vector<std::string> names) {
    auto ring = std::shared_ptr<FiniteRing>(new FiniteRing());
    ring->n_ = n;
    ring->add_ = std::move(add);
    ring->mul_ = std::move(mul);
    ring->spec_ = std::move(spec);
    ring->names_ = std::move(names);
    require(ring->add_.size() == static_cast<std::size_t>(n) * n, errc::invalid, "bad add table size");
    require(ring->mul_.size() == static_cast<std::size_t>(n) * n, errc::invalid, "bad mul table size");
    // locate 0 and 1
    int zero = -1, one = -1;
    for (int e = 0; e < n && (zero < 0 || one < 0); ++e) {
        bool is_zero = true, is_one = true;
        for (int a = 0; a < n; ++a) {
            if (ring->add_[static_cast<std::size_t>(a) * n + e] != a) is_zero = false;
            if (ring->mul_[static_cast<std::size_t>(a) * n + e] != a) is_one = false;
        }
        if (is_zero && zero < 0) zero = e;
        if (is_one && one < 0) one = e;
    }
    require(zero >= 0 && one >= 0, errc::invalid, "tables lack a zero or identity element");
    ring->zero_ = zero;
    ring->one_ = one;
    if (ring->names_.empty()) {
        for (int i = 0; i < n; ++i) ring->names_.push_back(std::to_string(i));
    }
    ring->finish_init();
    return ring;
}

RingPtr make_zmod(long n, const Caps& caps) {
    require(n >= 2, errc::invalid, "Z/n needs n >= 2");
    require(n <= caps.ring_size, errc::cap, "ring size above cap");
    const int m = static_cast<int>(n);
    std::vector<std::uint16_t> add(static_cast<std::size_t>(m) * m), mul(static_cast<std::size_t>(m) * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            add[static_cast<std::size_t>(a) * m + b] = static_cast<std::uint16_t>((a + b) % m);
            mul[static_cast<std::size_t>(a) * m + b] =
                static_cast<std::uint16_t>((static_cast<long>(a) * b) % m);
        }
    RingSpec spec;
    spec.kind = RingSpec::Kind::zmod;
    spec.n = n;
    return make_from_tables(std::move(spec), m, std::move(add), std::move(mul), {});
}

RingPtr make_galois(long p, long d, long r, const Caps& caps) {
    require(is_prime(p), errc::invalid, "p must be prime");
    require(d >= 1 && r >= 1, errc::invalid, "GR(p^d,r) needs d,r >= 1");
    long size = 1;
    for (long i = 0; i < d * r; ++i) {
        size *= p;
        require(size <= caps.ring_size, errc::cap, "ring size above cap");
    }
    long m = 1;  // p^d, the coefficient modulus
    for (long i = 0; i < d; ++i) m *= p;

    Poly fbar = min_irreducible(p, r);  // lift coefficientwise: representatives in [0,p)
    std::vector<long> f(fbar.begin(), fbar.end());

    const int n = static_cast<int>(size);
    const int rr = static_cast<int>(r);
    auto decode = [&](int idx, std::vector<long>& c) {
        c.assign(static_cast<std::size_t>(rr), 0);
        long v = idx;
        for (int i = 0; i < rr; ++i) {
            c[static_cast<std::size_t>(i)] = v % m;
            v /= m;
        }
    };
    auto encode = [&](const std::vector<long>& c) {
        long idx = 0;
        for (int i = rr - 1; i >= 0; --i) idx = idx * m + c[static_cast<std::size_t>(i)];
        return static_cast<int>(idx);
    };

    std::vector<std::uint16_t> add(static_cast<std::size_t>(n) * n), mul(static_cast<std::size_t>(n) * n);
    std::vector<long> ca, cb, prod;
    for (int a = 0; a < n; ++a) {
        decode(a, ca);
        for (int b = 0; b < n; ++b) {
            decode(b, cb);
            std::vector<long> sum(static_cast<std::size_t>(rr));
            for (int i = 0; i < rr; ++i)
                sum[static_cast<std::size_t>(i)] =
                    (ca[static_cast<std::size_t>(i)] + cb[static_cast<std::size_t>(i)]) % m;
            add[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(encode(sum));

            prod.assign(static_cast<std::size_t>(2 * rr - 1), 0);
            for (int i = 0; i < rr; ++i)
                for (int j = 0; j < rr; ++j)
                    prod[static_cast<std::size_t>(i + j)] =
                        (prod[static_cast<std::size_t>(i + j)] +
                         ca[static_cast<std::size_t>(i)] * cb[static_cast<std::size_t>(j)]) %
                        m;
            // reduce modulo the monic f of degree r: X^r = -(f_0 + ... + f_{r-1} X^{r-1})
            for (int k = 2 * rr - 2; k >= rr; --k) {
                long lead = prod[static_cast<std::size_t>(k)];
                if (!lead) continue;
                prod[static_cast<std::size_t>(k)] = 0;
                for (int j = 0; j < rr; ++j) {
                    long& c = prod[static_cast<std::size_t>(k - rr + j)];
                    c = ((c - lead * f[static_cast<std::size_t>(j)]) % m + m) % m;
                }
            }
            prod.resize(static_cast<std::size_t>(rr));
            mul[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(encode(prod));
        }
    }

    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    std::vector<long> c;
    for (int a = 0; a < n; ++a) {
        decode(a, c);
        if (rr == 1) {
            names.push_back(std::to_string(c[0]));
        } else {
            std::string s = "[";
            for (int i = 0; i < rr; ++i) {
                if (i) s += ",";
                s += std::to_string(c[static_cast<std::size_t>(i)]);
            }
            s += "]";
            names.push_back(std::move(s));
        }
    }

    RingSpec spec;
    spec.kind = RingSpec::Kind::galois;
    spec.p = p;
    spec.d = d;
    spec.r = r;
    return make_from_tables(std::move(spec), n, std::move(add), std::move(mul), std::move(names));
}

RingPtr make_trunc_poly(long q, long nexp, const Caps& caps) {
    long p = 0, e = 0;
    require(prime_power(q, p, e), errc::invalid, "q must be a prime power");
    require(nexp >= 1, errc::invalid, "POLY(q,n) needs n >= 1");
    long size = 1;
    for (long i = 0; i < nexp; ++i) {
        size *= q;
        require(size <= caps.ring_size, errc::cap, "ring size above cap");
    }
    RingPtr base = make_galois(p, 1, e, caps);

    const int n = static_cast<int>(size);
    const int deg = static_cast<int>(nexp);
    const int qq = static_cast<int>(q);
    auto decode = [&](int idx, std::vector<int>& c) {
        c.assign(static_cast<std::size_t>(deg), 0);
        long v = idx;
        for (int i = 0; i < deg; ++i) {
            c[static_cast<std::size_t>(i)] = static_cast<int>(v % qq);
            v /= qq;
        }
    };
    auto encode = [&](const std::vector<int>& c) {
        long idx = 0;
        for (int i = deg - 1; i >= 0; --i) idx = idx * qq + c[static_cast<std::size_t>(i)];
        return static_cast<int>(idx);
    };

    std::vector<std::uint16_t> add(static_cast<std::size_t>(n) * n), mul(static_cast<std::size_t>(n) * n);
    std::vector<int> ca, cb;
    for (int a = 0; a < n; ++a) {
        decode(a, ca);
        for (int b = 0; b < n; ++b) {
            decode(b, cb);
            std::vector<int> sum(static_cast<std::size_t>(deg));
            for (int i = 0; i < deg; ++i)
                sum[static_cast<std::size_t>(i)] =
                    base->add(ca[static_cast<std::size_t>(i)], cb[static_cast<std::size_t>(i)]);
            add[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(encode(sum));

            std::vector<int> prod(static_cast<std::size_t>(deg), base->zero());
            for (int i = 0; i < deg; ++i)
                for (int j = 0; j + i < deg; ++j)
                    prod[static_cast<std::size_t>(i + j)] =
                        base->add(prod[static_cast<std::size_t>(i + j)],
                                  base->mul(ca[static_cast<std::size_t>(i)], cb[static_cast<std::size_t>(j)]));
            mul[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(encode(prod));
        }
    }

    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    std::vector<int> c;
    for (int a = 0; a < n; ++a) {
        decode(a, c);
        std::string s = "[";
        for (int i = 0; i < deg; ++i) {
            if (i) s += ",";
            s += base->element_name(c[static_cast<std::size_t>(i)]);
        }
        s += "]";
        names.push_back(std::move(s));
    }

    RingSpec spec;
    spec.kind = RingSpec::Kind::trunc_poly;
    spec.q = q;
    spec.n = nexp;
    return make_from_tables(std::move(spec), n, std::move(add), std::move(mul), std::move(names));
}

RingPtr make_product(std::vector<RingPtr> factors, const Caps& caps) {
    require(factors.size() >= 2, errc::invalid, "product needs at least two factors");
    long size = 1;
    for (const RingPtr& f : factors) {
        size *= f->size();
        require(size <= caps.ring_size, errc::cap, "ring size above cap");
    }
    const int n = static_cast<int>(size);
    const int k = static_cast<int>(factors.size());
    std::vector<long> strides(static_cast<std::size_t>(k));
    long stride = 1;
    for (int i = 0; i < k; ++i) {
        strides[static_cast<std::size_t>(i)] = stride;
        stride *= factors[static_cast<std::size_t>(i)]->size();
    }
    auto component = [&](int x, int i) {
        return static_cast<int>((x / strides[static_cast<std::size_t>(i)]) %
                                factors[static_cast<std::size_t>(i)]->size());
    };

    std::vector<std::uint16_t> add(static_cast<std::size_t>(n) * n), mul(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            long sa = 0, sm = 0;
            for (int i = 0; i < k; ++i) {
                const FiniteRing& f = *factors[static_cast<std::size_t>(i)];
                sa += static_cast<long>(f.add(component(a, i), component(b, i))) *
                      strides[static_cast<std::size_t>(i)];
                sm += static_cast<long>(f.mul(component(a, i), component(b, i))) *
                      strides[static_cast<std::size_t>(i)];
            }
            add[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(sa);
            mul[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(sm);
        }

    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        std::string s = "(";
        for (int i = 0; i < k; ++i) {
            if (i) s += ",";
            s += factors[static_cast<std::size_t>(i)]->element_name(component(a, i));
        }
        s += ")";
        names.push_back(std::move(s));
    }

    RingSpec spec;
    spec.kind = RingSpec::Kind::product;
    for (const RingPtr& f : factors) spec.factors.push_back(f->spec());

    auto ring = std::shared_ptr<FiniteRing>(new FiniteRing());
    ring->n_ = n;
    ring->add_ = std::move(add);
    ring->mul_ = std::move(mul);
    ring->spec_ = std::move(spec);
    ring->names_ = std::move(names);
    ring->zero_ = 0;
    std::vector<std::uint16_t> dummy;
    // locate combined identity
    long one_idx = 0;
    for (int i = 0; i < k; ++i)
        one_idx += static_cast<long>(factors[static_cast<std::size_t>(i)]->one()) *
                   strides[static_cast<std::size_t>(i)];
    ring->one_ = static_cast<int>(one_idx);
    ring->factors_ = std::move(factors);
    ring->factor_strides_ = std::move(strides);
    ring->finish_init();
    return ring;
}

bool verify_ring_axioms(const FiniteRing& ring, std::string* violation, int exhaustive_limit) {
    const int n = ring.size();
    auto report = [&](const std::string& msg) {
        if (violation) *violation = msg;
        return false;
    };
    if (ring.zero() == ring.one()) return report("0 = 1");
    for (int a = 0; a < n; ++a) {
        if (ring.add(a, ring.zero()) != a) return report("a+0 != a at a=" + std::to_string(a));
        if (ring.mul(a, ring.one()) != a) return report("a*1 != a at a=" + std::to_string(a));
        for (int b = 0; b < n; ++b) {
            if (ring.add(a, b) != ring.add(b, a)) return report("addition not commutative");
            if (ring.mul(a, b) != ring.mul(b, a)) return report("multiplication not commutative");
        }
    }
    auto check_triple = [&](int a, int b, int c) -> bool {
        if (ring.add(ring.add(a, b), c) != ring.add(a, ring.add(b, c))) return false;
        if (ring.mul(ring.mul(a, b), c) != ring.mul(a, ring.mul(b, c))) return false;
        if (ring.mul(a, ring.add(b, c)) != ring.add(ring.mul(a, b), ring.mul(a, c))) return false;
        return true;
    };
    if (n <= exhaustive_limit) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (!check_triple(a, b, c))
                        return report("triple axiom fails at (" + std::to_string(a) + "," +
                                      std::to_string(b) + "," + std::to_string(c) + ")");
    } else {
        std::uint64_t state = 0x9e3779b97f4a7c15ull;
        auto next = [&]() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            return state;
        };
        for (int i = 0; i < 2000000; ++i) {
            int a = static_cast<int>(next() % static_cast<std::uint64_t>(n));
            int b = static_cast<int>(next() % static_cast<std::uint64_t>(n));
            int c = static_cast<int>(next() % static_cast<std::uint64_t>(n));
            if (!check_triple(a, b, c))
                return report("triple axiom fails at (" + std::to_string(a) + "," + std::to_string(b) +
                              "," + std::to_string(c) + ")");
        }
    }
    return true;
}

Ideal ideal_closure(const RingPtr& ring, std::span<const int> gens) {
    const int n = ring->size();
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    std::vector<int> members;
    auto insert = [&](int x) {
        if (!in[static_cast<std::size_t>(x)]) {
            in[static_cast<std::size_t>(x)] = 1;
            members.push_back(x);
        }
    };
    insert(ring->zero());
    for (int g : gens)
        for (int r = 0; r < n; ++r) insert(ring->mul(r, g));
    // additive closure; multiplicative closure is automatic for spans of R*g
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) insert(ring->add(members[i], members[j]));
    std::sort(members.begin(), members.end());
    return Ideal{ring, std::move(members)};
}

Ideal principal_ideal(const RingPtr& ring, int x) {
    int gens[1] = {x};
    return ideal_closure(ring, gens);
}

Ideal zero_ideal(const RingPtr& ring) {
    return Ideal{ring, {ring->zero()}};
}

std::vector<Ideal> enumerate_ideals(const RingPtr& ring, const Caps& caps) {
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue;
    Ideal z = zero_ideal(ring);
    seen.insert(z.elements);
    queue.push_back(z.elements);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::vector<int> current = queue[head];
        for (int x = 0; x < ring->size(); ++x) {
            if (std::binary_search(current.begin(), current.end(), x)) continue;
            std::vector<int> gens = current;
            gens.push_back(x);
            Ideal next = ideal_closure(ring, gens);
            if (seen.insert(next.elements).second) {
                require(seen.size() <= caps.ideal_count, errc::cap, "ideal count above cap");
                queue.push_back(next.elements);
            }
        }
    }
    std::vector<Ideal> out;
    out.reserve(seen.size());
    for (const auto& elems : seen) out.push_back(Ideal{ring, elems});
    std::sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
        if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
        return a.elements < b.elements;
    });
    return out;
}

std::vector<Ideal> minimal_ideals(const RingPtr& ring, const Caps& caps) {
    std::vector<Ideal> all = enumerate_ideals(ring, caps);
    std::vector<Ideal> out;
    for (const Ideal& i : all) {
        if (i.is_zero()) continue;
        bool minimal = true;
        for (const Ideal& j : all) {
            if (j.is_zero() || j.elements.size() >= i.elements.size()) continue;
            if (std::includes(i.elements.begin(), i.elements.end(), j.elements.begin(),
                              j.elements.end())) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(i);
    }
    return out;
}

QuotientMap quotient_ring(const RingPtr& ring, const Ideal& ideal) {
    require(ideal.parent.get() == ring.get(), errc::invalid, "ideal belongs to another ring");
    require(ideal.elements.size() < static_cast<std::size_t>(ring->size()), errc::invalid,
            "quotient by improper ideal");
    const int n = ring->size();
    std::vector<int> rep(static_cast<std::size_t>(n), -1);
    for (int x = 0; x < n; ++x) {
        int best = x;
        for (int i : ideal.elements) best = std::min(best, ring->add(x, i));
        rep[static_cast<std::size_t>(x)] = best;
    }
    std::vector<int> reps;
    for (int x = 0; x < n; ++x)
        if (rep[static_cast<std::size_t>(x)] == x) reps.push_back(x);
    const int m = static_cast<int>(reps.size());
    std::vector<int> class_of(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
        class_of[static_cast<std::size_t>(x)] = static_cast<int>(
            std::lower_bound(reps.begin(), reps.end(), rep[static_cast<std::size_t>(x)]) - reps.begin());

    std::vector<std::uint16_t> add(static_cast<std::size_t>(m) * m), mul(static_cast<std::size_t>(m) * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            add[static_cast<std::size_t>(a) * m + b] = static_cast<std::uint16_t>(
                class_of[static_cast<std::size_t>(ring->add(reps[static_cast<std::size_t>(a)],
                                                            reps[static_cast<std::size_t>(b)]))]);
            mul[static_cast<std::size_t>(a) * m + b] = static_cast<std::uint16_t>(
                class_of[static_cast<std::size_t>(ring->mul(reps[static_cast<std::size_t>(a)],
                                                            reps[static_cast<std::size_t>(b)]))]);
        }
    std::vector<std::string> names;
    for (int a = 0; a < m; ++a) names.push_back(ring->element_name(reps[static_cast<std::size_t>(a)]));
    RingSpec spec;
    spec.kind = RingSpec::Kind::quotient;
    spec.label = ring->spec_string() + "/I" + std::to_string(ideal.elements.size());
    RingPtr target = make_from_tables(std::move(spec), m, std::move(add), std::move(mul), std::move(names));

    QuotientMap qm;
    qm.source = ring;
    qm.ideal = ideal;
    qm.target = target;
    qm.projection = std::move(class_of);
    return qm;
}

namespace {

// Shared backtracking over images of a generating set, used for both
// automorphisms (a == b) and isomorphism search.
struct MapSearch {
    const FiniteRing& src;
    const FiniteRing& dst;
    std::vector<int> order;                       // discovery order of src elements
    std::vector<std::array<int, 3>> derivation;   // (op, a, b) per discovered element; op: 0 base, 1 add, 2 mul
    std::vector<int> gens;
    std::vector<std::vector<int>> candidates;     // candidate images per generator

    static std::array<long, 4> invariant(const FiniteRing& r, int x) {
        // additive order
        long ao = 1;
        int t = x;
        while (t != r.zero()) {
            t = r.add(t, x);
            ++ao;
        }
        long mo = 0, nil = -1;
        if (r.is_unit(x)) {
            mo = 1;
            t = x;
            while (t != r.one()) {
                t = r.mul(t, x);
                ++mo;
            }
        } else {
            // nilpotency index, or n+1 for non-nilpotent zero divisors
            nil = 1;
            t = x;
            while (t != r.zero() && nil <= r.size()) {
                t = r.mul(t, x);
                ++nil;
            }
            if (t != r.zero()) nil = r.size() + 1;
        }
        return {ao, mo, nil, r.is_unit(x) ? 1 : 0};
    }

    void setup() {
        const int n = src.size();
        std::vector<char> known(static_cast<std::size_t>(n), 0);
        auto discover = [&](int x, int op, int a, int b) {
            if (known[static_cast<std::size_t>(x)]) return;
            known[static_cast<std::size_t>(x)] = 1;
            order.push_back(x);
            derivation.push_back({op, a, b});
        };
        auto close = [&]() {
            for (std::size_t i = 0; i < order.size(); ++i)
                for (std::size_t j = 0; j <= i; ++j) {
                    discover(src.add(order[i], order[j]), 1, order[i], order[j]);
                    discover(src.mul(order[i], order[j]), 2, order[i], order[j]);
                }
        };
        discover(src.zero(), 0, -1, -1);
        discover(src.one(), 0, -1, -1);
        close();
        while (order.size() < static_cast<std::size_t>(n)) {
            int g = -1;
            for (int x = 0; x < n; ++x)
                if (!known[static_cast<std::size_t>(x)]) {
                    g = x;
                    break;
                }
            gens.push_back(g);
            discover(g, 0, -1, -1);
            close();
        }
        // candidate images by invariant match
        std::map<int, std::array<long, 4>> src_inv;
        for (int g : gens) src_inv[g] = invariant(src, g);
        for (int g : gens) {
            std::vector<int> cand;
            for (int y = 0; y < dst.size(); ++y)
                if (invariant(dst, y) == src_inv[g]) cand.push_back(y);
            candidates.push_back(std::move(cand));
        }
    }

    // Extends generator images along the derivation; returns the full map or
    // nullopt on an injectivity/consistency conflict.
    std::optional<std::vector<int>> extend(const std::vector<int>& gen_images) const {
        const int n = src.size();
        std::vector<int> img(static_cast<std::size_t>(n), -1);
        std::vector<char> used(static_cast<std::size_t>(n), 0);
        std::size_t next_gen = 0;
        auto assign = [&](int x, int y) {
            if (img[static_cast<std::size_t>(x)] >= 0) return img[static_cast<std::size_t>(x)] == y;
            if (used[static_cast<std::size_t>(y)]) return false;
            img[static_cast<std::size_t>(x)] = y;
            used[static_cast<std::size_t>(y)] = 1;
            return true;
        };
        for (std::size_t i = 0; i < order.size(); ++i) {
            const auto& [op, a, b] = derivation[i];
            int x = order[i], y;
            if (op == 0) {
                if (x == src.zero())
                    y = dst.zero();
                else if (x == src.one())
                    y = dst.one();
                else
                    y = gen_images[next_gen++];
            } else {
                int ia = img[static_cast<std::size_t>(a)], ib = img[static_cast<std::size_t>(b)];
                y = (op == 1) ? dst.add(ia, ib) : dst.mul(ia, ib);
            }
            if (!assign(x, y)) return std::nullopt;
        }
        return img;
    }

    bool full_check(const std::vector<int>& img) const {
        const int n = src.size();
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (img[static_cast<std::size_t>(src.add(a, b))] !=
                    dst.add(img[static_cast<std::size_t>(a)], img[static_cast<std::size_t>(b)]))
                    return false;
                if (img[static_cast<std::size_t>(src.mul(a, b))] !=
                    dst.mul(img[static_cast<std::size_t>(a)], img[static_cast<std::size_t>(b)]))
                    return false;
            }
        return true;
    }

    // Enumerates all valid maps; stops early when `first_only`.
    std::vector<Perm> run(bool first_only) const {
        std::vector<Perm> found;
        std::vector<int> choice(gens.size(), 0);
        std::vector<int> gen_images(gens.size());
        std::function<void(std::size_t)> dfs = [&](std::size_t level) {
            if (first_only && !found.empty()) return;
            if (level == gens.size()) {
                auto img = extend(gen_images);
                if (img && full_check(*img)) {
                    std::vector<Point> pts(img->begin(), img->end());
                    found.push_back(Perm(std::move(pts)));
                }
                return;
            }
            for (int y : candidates[level]) {
                gen_images[level] = y;
                dfs(level + 1);
            }
        };
        dfs(0);
        return found;
    }
};

}  // namespace

PermGroup ring_automorphisms(const RingPtr& ring, const Caps& caps) {
    require(ring->size() <= caps.ring_size, errc::cap, "ring size above cap");
    MapSearch search{*ring, *ring, {}, {}, {}, {}};
    search.setup();
    std::vector<Perm> autos = search.run(false);
    return PermGroup::from_elements(ring->size(), std::move(autos));
}

std::optional<Perm> find_ring_isomorphism(const FiniteRing& a, const FiniteRing& b) {
    if (a.size() != b.size()) return std::nullopt;
    MapSearch search{a, b, {}, {}, {}, {}};
    search.setup();
    std::vector<Perm> maps = search.run(true);
    if (maps.empty()) return std::nullopt;
    return maps.front();
}

std::vector<LocalFactor> crt_decompose(const RingPtr& ring, const Caps& caps) {
    const RingSpec& spec = ring->spec();
    if (ring->structure().is_local) {
        LocalFactor f;
        f.ring = ring;
        f.embed_add.resize(static_cast<std::size_t>(ring->size()));
        std::iota(f.embed_add.begin(), f.embed_add.end(), 0);
        f.embed_mult = f.embed_add;
        return {std::move(f)};
    }
    if (spec.kind == RingSpec::Kind::product) {
        std::vector<LocalFactor> out;
        for (int i = 0; i < ring->num_factors(); ++i) {
            RingPtr child = ring->factor(i);
            for (LocalFactor& sub : crt_decompose(child, caps)) {
                LocalFactor f;
                f.ring = sub.ring;
                for (int x = 0; x < sub.ring->size(); ++x) {
                    f.embed_add.push_back(ring->embed_add(i, sub.embed_add[static_cast<std::size_t>(x)]));
                    f.embed_mult.push_back(
                        ring->embed_mult(i, sub.embed_mult[static_cast<std::size_t>(x)]));
                }
                out.push_back(std::move(f));
            }
        }
        return out;
    }
    if (spec.kind == RingSpec::Kind::zmod) {
        long n = spec.n;
        std::vector<std::pair<long, long>> pps;  // (p, p^d)
        long m = n;
        for (long p = 2; p * p <= m; ++p) {
            if (m % p) continue;
            long pd = 1;
            while (m % p == 0) {
                m /= p;
                pd *= p;
            }
            pps.push_back({p, pd});
        }
        if (m > 1) pps.push_back({m, m});
        std::vector<LocalFactor> out;
        for (auto [p, pd] : pps) {
            long other = n / pd;
            // idempotent e = 1 mod pd, 0 mod other
            long e = 0;
            for (long x = 0; x < n; ++x)
                if (x % pd == 1 % pd && x % other == 0) {
                    e = x;
                    break;
                }
            long d = 0;
            for (long t = pd; t > 1; t /= p) ++d;
            LocalFactor f;
            f.ring = make_galois(p, d, 1, caps);
            for (long x = 0; x < pd; ++x) {
                f.embed_add.push_back(static_cast<int>((x * e) % n));
                f.embed_mult.push_back(static_cast<int>((x * e + 1 - e % n + n) % n));
            }
            out.push_back(std::move(f));
        }
        return out;
    }
    // fallback: primitive idempotent search on the tables
    const int n = ring->size();
    std::vector<int> idem;
    for (int e = 0; e < n; ++e)
        if (e != ring->zero() && ring->mul(e, e) == e) idem.push_back(e);
    std::vector<int> primitive;
    for (int e : idem) {
        bool prim = true;
        for (int f : idem)
            if (f != e && ring->mul(e, f) == f) {
                prim = false;
                break;
            }
        if (prim) primitive.push_back(e);
    }
    std::vector<LocalFactor> out;
    int fi = 0;
    for (int e : primitive) {
        std::vector<int> members;
        for (int x = 0; x < n; ++x) {
            int y = ring->mul(e, x);
            members.push_back(y);
        }
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        const int m = static_cast<int>(members.size());
        auto index_of = [&](int x) {
            return static_cast<int>(std::lower_bound(members.begin(), members.end(), x) -
                                    members.begin());
        };
        std::vector<std::uint16_t> add(static_cast<std::size_t>(m) * m),
            mul(static_cast<std::size_t>(m) * m);
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                add[static_cast<std::size_t>(a) * m + b] = static_cast<std::uint16_t>(
                    index_of(ring->add(members[static_cast<std::size_t>(a)],
                                       members[static_cast<std::size_t>(b)])));
                mul[static_cast<std::size_t>(a) * m + b] = static_cast<std::uint16_t>(
                    index_of(ring->mul(members[static_cast<std::size_t>(a)],
                                       members[static_cast<std::size_t>(b)])));
            }
        std::vector<std::string> names;
        for (int a = 0; a < m; ++a)
            names.push_back(ring->element_name(members[static_cast<std::size_t>(a)]));
        RingSpec fs;
        fs.kind = RingSpec::Kind::opaque;
        fs.label = "factor" + std::to_string(fi++) + "(" + ring->spec_string() + ")";
        LocalFactor f;
        f.ring = make_from_tables(std::move(fs), m, std::move(add), std::move(mul), std::move(names));
        int complement = ring->sub(ring->one(), e);
        for (int a = 0; a < m; ++a) {
            f.embed_add.push_back(members[static_cast<std::size_t>(a)]);
            f.embed_mult.push_back(ring->add(members[static_cast<std::size_t>(a)], complement));
        }
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace cycsch
