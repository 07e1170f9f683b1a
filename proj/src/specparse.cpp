#include "cycsch/specparse.hpp"

#include <algorithm>
#include <cctype>

namespace cycsch {

namespace {

[[noreturn]] void parse_fail(const std::string& spec, std::size_t pos, const std::string& what) {
    fail(errc::parse, "parse error at position " + std::to_string(pos) + " in \"" + spec +
                          "\": " + what);
}

long parse_long(const std::string& spec, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos]))) ++pos;
    if (pos == start) parse_fail(spec, start, "expected a number");
    return std::stol(spec.substr(start, pos - start));
}

void expect(const std::string& spec, std::size_t& pos, char c) {
    if (pos >= spec.size() || spec[pos] != c)
        parse_fail(spec, pos, std::string("expected '") + c + "'");
    ++pos;
}

RingPtr parse_factor(const std::string& spec, std::size_t& pos, const Caps& caps) {
    auto starts_with = [&](const char* prefix) {
        return spec.compare(pos, std::string(prefix).size(), prefix) == 0;
    };
    if (starts_with("Z/")) {
        pos += 2;
        long n = parse_long(spec, pos);
        return make_zmod(n, caps);
    }
    if (starts_with("GR(")) {
        pos += 3;
        long p = parse_long(spec, pos);
        expect(spec, pos, '^');
        long d = parse_long(spec, pos);
        expect(spec, pos, ',');
        long r = parse_long(spec, pos);
        expect(spec, pos, ')');
        return make_galois(p, d, r, caps);
    }
    if (starts_with("GF(")) {
        pos += 3;
        long q = parse_long(spec, pos);
        expect(spec, pos, ')');
        long p = 0, e = 0, m = q;
        for (long cand = 2; cand <= m; ++cand) {
            if (m % cand) continue;
            p = cand;
            break;
        }
        if (p == 0) parse_fail(spec, pos, "GF size must be a prime power");
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (m != 1) parse_fail(spec, pos, "GF size must be a prime power");
        return make_galois(p, 1, e, caps);
    }
    if (starts_with("POLY(")) {
        pos += 5;
        long q = parse_long(spec, pos);
        expect(spec, pos, ',');
        long n = parse_long(spec, pos);
        expect(spec, pos, ')');
        return make_trunc_poly(q, n, caps);
    }
    parse_fail(spec, pos, "expected Z/, GR(, GF(, or POLY(");
}

// split on commas at bracket depth 0
std::vector<std::string> split_elements(const std::string& s) {
    std::vector<std::string> out;
    std::string current;
    int depth = 0;
    for (char c : s) {
        if (c == '[' || c == '(') ++depth;
        if (c == ']' || c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    out.push_back(current);
    return out;
}

int resolve_element(const RingPtr& ring, const std::string& token) {
    if (auto byname = ring->element_by_name(token)) return *byname;
    bool numeric = !token.empty() &&
                   std::all_of(token.begin(), token.end(),
                               [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (numeric) {
        long idx = std::stol(token);
        if (idx >= 0 && idx < ring->size()) return static_cast<int>(idx);
    }
    fail(errc::parse, "unknown element \"" + token + "\" of " + ring->spec_string());
}

}  // namespace

RingPtr parse_ring_spec(const std::string& raw, const Caps& caps) {
    std::string spec;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) spec += c;
    require(!spec.empty(), errc::parse, "empty ring spec");
    std::size_t pos = 0;
    std::vector<RingPtr> factors;
    factors.push_back(parse_factor(spec, pos, caps));
    while (pos < spec.size()) {
        expect(spec, pos, '*');
        factors.push_back(parse_factor(spec, pos, caps));
    }
    if (factors.size() == 1) return factors[0];
    return make_product(std::move(factors), caps);
}

UnitSubgroup parse_subgroup_spec(const RingPtr& ring, const std::string& raw) {
    std::string spec = raw;
    if (spec.rfind("K=", 0) == 0) spec = spec.substr(2);
    require(!spec.empty(), errc::parse, "empty subgroup spec");
    if (spec == "all") return UnitSubgroup::full(ring);
    if (spec == "1") return UnitSubgroup::trivial(ring);
    if (spec.rfind("gens:", 0) == 0) {
        std::vector<int> gens;
        for (const std::string& tok : split_elements(spec.substr(5)))
            gens.push_back(resolve_element(ring, tok));
        return UnitSubgroup::generated(ring, gens);
    }
    if (spec.rfind("elems:", 0) == 0) {
        std::vector<int> elems;
        for (const std::string& tok : split_elements(spec.substr(6)))
            elems.push_back(resolve_element(ring, tok));
        return UnitSubgroup(ring, std::move(elems));  // closure verified by the constructor
    }
    fail(errc::parse, "subgroup spec must be all, 1, gens:..., or elems:...");
}

}  // namespace cycsch
