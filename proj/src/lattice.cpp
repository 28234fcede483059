#include "pslat/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_map>

#include "pslat/dd.hpp"
#include "pslat/errors.hpp"

namespace pslat {

char atom_name(Atom a) {
    switch (a) {
        case Atom::A: return 'A';
        case Atom::B: return 'B';
        case Atom::C: return 'C';
    }
    throw std::logic_error("bad atom");
}

ExprPtr Expr::atom(Atom a) {
    auto e = std::shared_ptr<Expr>(new Expr());
    e->kind_ = Kind::Atom;
    e->atom_ = a;
    return e;
}

ExprPtr Expr::join(ExprPtr lhs, ExprPtr rhs) {
    auto e = std::shared_ptr<Expr>(new Expr());
    e->kind_ = Kind::Join;
    e->lhs_ = std::move(lhs);
    e->rhs_ = std::move(rhs);
    return e;
}

ExprPtr Expr::meet(ExprPtr lhs, ExprPtr rhs) {
    auto e = std::shared_ptr<Expr>(new Expr());
    e->kind_ = Kind::Meet;
    e->lhs_ = std::move(lhs);
    e->rhs_ = std::move(rhs);
    return e;
}

ExprPtr Expr::fpow(long exponent, ExprPtr base) {
    if (exponent < 0) throw std::invalid_argument("f^n needs n >= 0");
    auto e = std::shared_ptr<Expr>(new Expr());
    e->kind_ = Kind::FPow;
    e->exponent_ = exponent;
    e->base_ = std::move(base);
    return e;
}

namespace {

struct Parser {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    [[noreturn]] void fail(std::vector<std::string> expected) {
        throw SyntaxError(pos, std::move(expected));
    }

    bool try_eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!try_eat(c)) fail({std::string("'") + c + "'"});
    }

    long parse_nat() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail({"a nonnegative integer"});
        long n = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            if (n > 1'000'000'000L) fail({"a smaller exponent"});
            n = n * 10 + (s[pos] - '0');
            ++pos;
        }
        return n;
    }

    ExprPtr parse_atom() {
        skip_ws();
        if (pos >= s.size()) fail({"'A'", "'B'", "'C'", "'('", "'f^'"});
        const char c = s[pos];
        if (c == 'A' || c == 'B' || c == 'C') {
            ++pos;
            return Expr::atom(c == 'A' ? Atom::A : c == 'B' ? Atom::B : Atom::C);
        }
        if (c == '(') {
            ++pos;
            ExprPtr inner = parse_expr();
            expect(')');
            return inner;
        }
        if (c == 'f') {
            ++pos;
            expect('^');
            const long n = parse_nat();
            expect('(');
            ExprPtr inner = parse_expr();
            expect(')');
            return Expr::fpow(n, std::move(inner));
        }
        fail({"'A'", "'B'", "'C'", "'('", "'f^'"});
    }

    ExprPtr parse_term() {
        ExprPtr e = parse_atom();
        while (try_eat('&')) e = Expr::meet(std::move(e), parse_atom());
        return e;
    }

    ExprPtr parse_expr() {
        ExprPtr e = parse_term();
        while (try_eat('|')) e = Expr::join(std::move(e), parse_term());
        return e;
    }
};

}  // namespace

ExprPtr parse(std::string_view text) {
    Parser p{text};
    ExprPtr e = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail({"'&'", "'|'", "end of input"});
    return e;
}

std::string to_string(const ExprPtr& e) {
    switch (e->kind()) {
        case Expr::Kind::Atom:
            return std::string(1, atom_name(e->atom_value()));
        case Expr::Kind::Join:
            return "(" + to_string(e->lhs()) + "|" + to_string(e->rhs()) + ")";
        case Expr::Kind::Meet:
            return "(" + to_string(e->lhs()) + "&" + to_string(e->rhs()) + ")";
        case Expr::Kind::FPow:
            return "f^" + std::to_string(e->exponent()) + "(" + to_string(e->base()) + ")";
    }
    throw std::logic_error("bad expr kind");
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a->kind() != b->kind()) return false;
    switch (a->kind()) {
        case Expr::Kind::Atom:
            return a->atom_value() == b->atom_value();
        case Expr::Kind::Join:
        case Expr::Kind::Meet:
            return expr_equal(a->lhs(), b->lhs()) && expr_equal(a->rhs(), b->rhs());
        case Expr::Kind::FPow:
            return a->exponent() == b->exponent() && expr_equal(a->base(), b->base());
    }
    return false;
}

std::string canonical_key(const ExprPtr& e) {
    switch (e->kind()) {
        case Expr::Kind::Atom:
            return std::string(1, atom_name(e->atom_value()));
        case Expr::Kind::Join:
        case Expr::Kind::Meet: {
            std::string l = canonical_key(e->lhs());
            std::string r = canonical_key(e->rhs());
            if (r < l) std::swap(l, r);
            const char op = e->kind() == Expr::Kind::Join ? '|' : '&';
            return "(" + l + op + r + ")";
        }
        case Expr::Kind::FPow:
            return canonical_key(expand_fpow(e));
    }
    throw std::logic_error("bad expr kind");
}

ExprPtr f_apply(ExprPtr e) {
    const ExprPtr a = Expr::atom(Atom::A);
    const ExprPtr b = Expr::atom(Atom::B);
    const ExprPtr c = Expr::atom(Atom::C);
    return Expr::join(
        a, Expr::meet(b, Expr::join(c, Expr::meet(a, Expr::join(b, Expr::meet(c, std::move(e)))))));
}

ExprPtr expand_fpow(const ExprPtr& e) {
    switch (e->kind()) {
        case Expr::Kind::Atom:
            return e;
        case Expr::Kind::Join:
            return Expr::join(expand_fpow(e->lhs()), expand_fpow(e->rhs()));
        case Expr::Kind::Meet:
            return Expr::meet(expand_fpow(e->lhs()), expand_fpow(e->rhs()));
        case Expr::Kind::FPow: {
            ExprPtr inner = expand_fpow(e->base());
            for (long i = 0; i < e->exponent(); ++i) inner = f_apply(std::move(inner));
            return inner;
        }
    }
    throw std::logic_error("bad expr kind");
}

namespace {

Ray pair_ray(int i, int j) { return ray_of({i, j}); }

std::vector<Ray> with_delta(std::initializer_list<Ray> extra) {
    std::vector<Ray> out = delta_rays();
    out.insert(out.end(), extra.begin(), extra.end());
    return out;
}

std::vector<Ray> with_units(std::initializer_list<Ray> extra) {
    std::vector<Ray> out;
    for (int i = 1; i <= 8; ++i) out.push_back(unit_ray(i));
    out.insert(out.end(), extra.begin(), extra.end());
    return out;
}

}  // namespace

const std::vector<Ray>& delta_rays() {
    static const std::vector<Ray> delta = {pair_ray(1, 8), pair_ray(2, 7), pair_ray(3, 6),
                                           pair_ray(4, 5)};
    return delta;
}

const std::vector<Ray>& base_generators(Atom a) {
    static const std::vector<Ray> alpha =
        with_delta({pair_ray(1, 4), pair_ray(4, 8), pair_ray(8, 5), pair_ray(5, 1),
                    pair_ray(2, 3), pair_ray(3, 7), pair_ray(7, 6), pair_ray(6, 2)});
    static const std::vector<Ray> beta =
        with_delta({pair_ray(1, 3), pair_ray(3, 8), pair_ray(8, 6), pair_ray(6, 1),
                    pair_ray(2, 4), pair_ray(4, 7), pair_ray(7, 5), pair_ray(5, 2)});
    static const std::vector<Ray> gamma =
        with_delta({pair_ray(1, 2), pair_ray(2, 8), pair_ray(8, 7), pair_ray(7, 1),
                    pair_ray(3, 4), pair_ray(4, 6), pair_ray(6, 5), pair_ray(5, 3)});
    switch (a) {
        case Atom::A: return alpha;
        case Atom::B: return beta;
        case Atom::C: return gamma;
    }
    throw std::logic_error("bad atom");
}

const std::vector<Ray>& base_dual_generators(Atom a) {
    static const std::vector<Ray> alpha =
        with_units({ray_of({4, 5, 8}, {1}), ray_of({1, 5, 8}, {4}), ray_of({1, 4, 8}, {5}),
                    ray_of({1, 4, 5}, {8}), ray_of({3, 6, 7}, {2}), ray_of({2, 6, 7}, {3}),
                    ray_of({2, 3, 7}, {6}), ray_of({2, 3, 6}, {7})});
    static const std::vector<Ray> beta =
        with_units({ray_of({3, 6, 8}, {1}), ray_of({1, 6, 8}, {3}), ray_of({1, 3, 8}, {6}),
                    ray_of({1, 3, 6}, {8}), ray_of({4, 5, 7}, {2}), ray_of({2, 5, 7}, {4}),
                    ray_of({2, 4, 7}, {5}), ray_of({2, 4, 5}, {7})});
    static const std::vector<Ray> gamma =
        with_units({ray_of({2, 7, 8}, {1}), ray_of({1, 7, 8}, {2}), ray_of({1, 2, 8}, {7}),
                    ray_of({1, 2, 7}, {8}), ray_of({4, 5, 6}, {3}), ray_of({3, 5, 6}, {4}),
                    ray_of({3, 4, 6}, {5}), ray_of({3, 4, 5}, {6})});
    switch (a) {
        case Atom::A: return alpha;
        case Atom::B: return beta;
        case Atom::C: return gamma;
    }
    throw std::logic_error("bad atom");
}

const Cone& BaseCones::of(Atom a) const {
    switch (a) {
        case Atom::A: return alpha;
        case Atom::B: return beta;
        case Atom::C: return gamma;
    }
    throw std::logic_error("bad atom");
}

namespace {

Cone validated_base(Atom a) {
    Cone cone = dd_convert(Cone::from_generators(base_generators(a)));
    const std::vector<Ray> expect_v = dd::canonicalize_generators(base_generators(a));
    const std::vector<Ray> expect_h = dd::canonicalize_generators(base_dual_generators(a));
    if (cone.generators() != expect_v || cone.generators().size() != 12)
        throw std::logic_error("base cone table: generator cross-check failed");
    if (cone.facets() != expect_h || cone.facets().size() != 16)
        throw std::logic_error("base cone table: facet cross-check failed");
    return cone;
}

}  // namespace

const BaseCones& BaseCones::standard() {
    static const BaseCones base{validated_base(Atom::A), validated_base(Atom::B),
                                validated_base(Atom::C)};
    return base;
}

namespace {

Cone eval_node(const ExprPtr& e, const BaseCones& base,
               std::unordered_map<std::string, Cone>& memo) {
    const std::string key = canonical_key(e);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Cone result = [&] {
        switch (e->kind()) {
            case Expr::Kind::Atom:
                return base.of(e->atom_value());
            case Expr::Kind::Join:
                return dd_convert(
                    join(eval_node(e->lhs(), base, memo), eval_node(e->rhs(), base, memo)));
            case Expr::Kind::Meet:
                return dd_convert(
                    meet(eval_node(e->lhs(), base, memo), eval_node(e->rhs(), base, memo)));
            case Expr::Kind::FPow:
                return eval_node(expand_fpow(e), base, memo);
        }
        throw std::logic_error("bad expr kind");
    }();
    memo.emplace(key, result);
    return result;
}

}  // namespace

Cone eval(const ExprPtr& e, const BaseCones& base) {
    std::unordered_map<std::string, Cone> memo;
    return eval_node(e, base, memo);
}

Cone eval(std::string_view text, const BaseCones& base) { return eval(parse(text), base); }

Cone eval(const ExprPtr& e, const BaseCones& base, std::unordered_map<std::string, Cone>& memo) {
    return eval_node(e, base, memo);
}

Cone f_cone(const Cone& sigma, const BaseCones& base) {
    const Cone inner1 = dd_convert(meet(base.gamma, sigma));
    const Cone inner2 = dd_convert(join(base.beta, inner1));
    const Cone inner3 = dd_convert(meet(base.alpha, inner2));
    const Cone inner4 = dd_convert(join(base.gamma, inner3));
    const Cone inner5 = dd_convert(meet(base.beta, inner4));
    return dd_convert(join(base.alpha, inner5));
}

}  // namespace pslat
