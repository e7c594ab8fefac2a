#include "ggn/group_spec.hpp"

#include <cctype>

#include "ggn/errors.hpp"
#include "ggn/number_theory.hpp"

namespace ggn {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    GroupSpec parse() {
        GroupSpec spec;
        spec.terms.push_back(term());
        while (true) {
            skip_ws();
            if (at_end())
                break;
            if (peek() != 'x')
                fail("expected 'x' or end of input");
            ++pos_;
            spec.terms.push_back(term());
        }
        return spec;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool accept(std::string_view word) {
        skip_ws();
        if (text_.substr(pos_, word.size()) == word) {
            pos_ += word.size();
            return true;
        }
        return false;
    }

    std::size_t integer() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected an integer");
        std::size_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<std::size_t>(text_[pos_++] - '0');
            if (v > 1'000'000'000)
                fail("integer too large");
        }
        return v;
    }

    Term affine(AtomKind kind) {
        expect('(');
        skip_ws();
        const std::size_t dim_at = pos_;
        if (integer() != 1)
            throw ParseError("only dimension 1 is supported in AGL(1,p)", dim_at);
        expect(',');
        const std::size_t p = integer();
        expect(')');
        return Atom{kind, p};
    }

    Term term() {
        skip_ws();
        if (accept("AGL+"))
            return affine(AtomKind::Agl1Alt);
        if (accept("AGL"))
            return affine(AtomKind::Agl1);
        if (accept("Q8"))
            return Atom{AtomKind::Quaternion, 8};
        const char c = peek();
        AtomKind kind;
        switch (c) {
            case 'S': kind = AtomKind::Symmetric; break;
            case 'A': kind = AtomKind::Alternating; break;
            case 'C':
            case 'Z': kind = AtomKind::Cyclic; break;
            case 'D': kind = AtomKind::Dihedral; break;
            default: fail("expected a group term");
        }
        ++pos_;
        const std::size_t n = integer();
        if (kind == AtomKind::Cyclic) {
            skip_ws();
            if (peek() == ':') {
                ++pos_;
                skip_ws();
                if (peek() != 'C' && peek() != 'Z')
                    fail("expected 'C' after ':'");
                ++pos_;
                const std::size_t q = integer();
                expect('@');
                const std::size_t k = integer();
                return Semidirect{n, q, k};
            }
        }
        return Atom{kind, n};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void validate(const Term& term) {
    if (const auto* s = std::get_if<Semidirect>(&term)) {
        if (s->p < 1 || s->q < 1)
            throw InvalidParameter("semidirect factor orders must be positive");
        if (s->p > 1 && (s->k % s->p == 0 || pow_mod(s->k, s->q, s->p) != 1))
            throw InvalidParameter("invalid semidirect action k=" + std::to_string(s->k) + ": need k^" +
                                   std::to_string(s->q) + " = 1 mod " + std::to_string(s->p));
        return;
    }
    const auto& a = std::get<Atom>(term);
    switch (a.kind) {
        case AtomKind::Symmetric:
        case AtomKind::Alternating:
        case AtomKind::Cyclic:
            if (a.param < 1)
                throw InvalidParameter("group parameter n must be at least 1");
            break;
        case AtomKind::Dihedral:
            if (a.param < 2)
                throw InvalidParameter("dihedral parameter n must be at least 2 (order 2n)");
            break;
        case AtomKind::Agl1:
        case AtomKind::Agl1Alt:
            if (a.param < 3 || !is_prime(a.param))
                throw InvalidParameter("AGL(1,p) requires an odd prime p, got p=" + std::to_string(a.param));
            break;
        case AtomKind::Quaternion: break;
    }
}

FiniteGroup build_term(const Term& term, std::size_t cap) {
    if (const auto* s = std::get_if<Semidirect>(&term))
        return semidirect_cyclic(s->p, s->q, s->k, cap);
    const auto& a = std::get<Atom>(term);
    switch (a.kind) {
        case AtomKind::Symmetric: return symmetric(a.param, cap);
        case AtomKind::Alternating: return alternating(a.param, cap);
        case AtomKind::Cyclic: return cyclic(a.param, cap);
        case AtomKind::Dihedral: return dihedral(a.param, cap);
        case AtomKind::Quaternion: return quaternion8();
        case AtomKind::Agl1: return agl1(a.param, cap);
        case AtomKind::Agl1Alt: return agl1_cap_alt(a.param, cap);
    }
    throw InvalidParameter("unknown group term");
}

}  // namespace

const Atom* GroupSpec::as_family() const {
    if (terms.size() != 1)
        return nullptr;
    const auto* a = std::get_if<Atom>(&terms.front());
    if (a && (a->kind == AtomKind::Symmetric || a->kind == AtomKind::Alternating))
        return a;
    return nullptr;
}

GroupSpec parse_group_spec(std::string_view text) {
    auto spec = Parser(text).parse();
    for (const auto& t : spec.terms)
        validate(t);
    return spec;
}

std::string to_string(const Term& term) {
    if (const auto* s = std::get_if<Semidirect>(&term))
        return "C" + std::to_string(s->p) + ":C" + std::to_string(s->q) + "@" + std::to_string(s->k);
    const auto& a = std::get<Atom>(term);
    const auto n = std::to_string(a.param);
    switch (a.kind) {
        case AtomKind::Symmetric: return "S" + n;
        case AtomKind::Alternating: return "A" + n;
        case AtomKind::Cyclic: return "C" + n;
        case AtomKind::Dihedral: return "D" + n;
        case AtomKind::Quaternion: return "Q8";
        case AtomKind::Agl1: return "AGL(1," + n + ")";
        case AtomKind::Agl1Alt: return "AGL+(1," + n + ")";
    }
    return "?";
}

std::string to_string(const GroupSpec& spec) {
    std::string out;
    for (const auto& t : spec.terms) {
        if (!out.empty())
            out += " x ";
        out += to_string(t);
    }
    return out;
}

FiniteGroup build_group(const GroupSpec& spec, std::size_t order_cap) {
    FiniteGroup g = build_term(spec.terms.front(), order_cap);
    for (std::size_t i = 1; i < spec.terms.size(); ++i)
        g = direct_product(g, build_term(spec.terms[i], order_cap), order_cap);
    g.set_name(to_string(spec));
    return g;
}

}  // namespace ggn
