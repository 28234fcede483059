#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pslat/cone.hpp"

namespace pslat {

// The three base cones: A-BC, B-CA, C-AB biseparability restricted to the
// GHZ-diagonal space.
enum class Atom { A, B, C };
char atom_name(Atom a);

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Immutable expression tree over atoms A, B, C with binary join ("|") and
// meet ("&"), plus the FPow sugar node f^n(e) standing for n applications of
// the chain polynomial f.
class Expr {
public:
    enum class Kind { Atom, Join, Meet, FPow };

    static ExprPtr atom(Atom a);
    static ExprPtr join(ExprPtr lhs, ExprPtr rhs);
    static ExprPtr meet(ExprPtr lhs, ExprPtr rhs);
    static ExprPtr fpow(long exponent, ExprPtr base);  // exponent >= 0

    Kind kind() const { return kind_; }
    Atom atom_value() const { return atom_; }
    const ExprPtr& lhs() const { return lhs_; }
    const ExprPtr& rhs() const { return rhs_; }
    long exponent() const { return exponent_; }
    const ExprPtr& base() const { return base_; }

private:
    Expr() = default;
    Kind kind_ = Kind::Atom;
    Atom atom_ = Atom::A;
    ExprPtr lhs_, rhs_;
    long exponent_ = 0;
    ExprPtr base_;
};

// Grammar (whitespace ignored; "&" binds tighter than "|"):
//   expr := term ("|" term)*
//   term := atom ("&" atom)*
//   atom := "A" | "B" | "C" | "(" expr ")" | "f^" nat "(" expr ")"
ExprPtr parse(std::string_view text);  // throws SyntaxError with byte offset

std::string to_string(const ExprPtr& e);
bool expr_equal(const ExprPtr& a, const ExprPtr& b);  // structural

// Memo key: commutative children sorted, FPow expanded.
std::string canonical_key(const ExprPtr& e);

// Wraps e in the chain polynomial: A|(B&(C|(A&(B|(C&e))))).
ExprPtr f_apply(ExprPtr e);

// FPow-free equivalent tree.
ExprPtr expand_fpow(const ExprPtr& e);

// The base cones with both representations populated. standard() builds them
// from the hard-coded extreme-ray tables and cross-checks each against its
// dual table via double description, so a transcription error fails loudly
// at first use.
struct BaseCones {
    Cone alpha, beta, gamma;
    const Cone& of(Atom a) const;
    static const BaseCones& standard();
};

// Bottom-up evaluation (Join -> join, Meet -> meet) with memoization on
// canonical subtree keys; every returned cone carries both representations.
Cone eval(const ExprPtr& e, const BaseCones& base);
Cone eval(std::string_view text, const BaseCones& base);
// Variant sharing a memo table across evaluations of related expressions.
Cone eval(const ExprPtr& e, const BaseCones& base, std::unordered_map<std::string, Cone>& memo);

// Cone-level application of the chain polynomial f.
Cone f_cone(const Cone& sigma, const BaseCones& base);

// Hard-coded extreme-ray tables.
const std::vector<Ray>& delta_rays();                      // 4 common rays
const std::vector<Ray>& base_generators(Atom a);           // 12 extreme rays
const std::vector<Ray>& base_dual_generators(Atom a);      // 16 facet normals

}  // namespace pslat
