#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "grasscohom/bott.hpp"

namespace grc {

enum class Generator { Q, S, QDual, SDual };

std::string to_string(Generator g);

struct BundleExpr;
using ExprPtr = std::shared_ptr<const BundleExpr>;

namespace node {
struct LineBundle { int k; };
struct Gen { Generator g; };
struct Sym { int j; Generator g; };
struct Wedge { int j; Generator g; };
struct Schur { std::vector<int> lambda; Generator g; };
struct Twist { ExprPtr e; int k; };
struct Dual { ExprPtr e; };
struct Tensor { ExprPtr a, b; };
struct Sum { ExprPtr a, b; };
struct Scale { long mult; ExprPtr e; };
} // namespace node

struct BundleExpr {
    using Node = std::variant<node::LineBundle, node::Gen, node::Sym, node::Wedge, node::Schur, node::Twist,
                              node::Dual, node::Tensor, node::Sum, node::Scale>;
    Node node;
};

namespace make {
ExprPtr line(int k);
ExprPtr gen(Generator g);
ExprPtr sym(int j, Generator g);
ExprPtr wedge(int j, Generator g);
ExprPtr schur(std::vector<int> lambda, Generator g);
ExprPtr twist(ExprPtr e, int k);
ExprPtr dual(ExprPtr e);
ExprPtr tensor(ExprPtr a, ExprPtr b);
ExprPtr sum(ExprPtr a, ExprPtr b);
ExprPtr scale(long mult, ExprPtr e);
} // namespace make

bool structurally_equal(const BundleExpr& a, const BundleExpr& b);

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Rejects expressions that are syntactically fine but invalid on G(1,n),
/// e.g. wedge^5(Q) or a Schur functor of a composite bundle.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

ExprPtr parse(std::string_view text, int n);

/// Prints in the input grammar; parse(print(e)) reproduces e.
std::string print(const BundleExpr& e);

void validate(const BundleExpr& e, int n);

/// Direct sum of irreducibles with multiplicities; the empty sum is the zero bundle.
class IrredSum {
public:
    using Map = std::map<Irred, BigInt>;

    explicit IrredSum(int n) : n_(n) {}
    IrredSum(const Irred& x, const BigInt& mult = 1);

    int n() const { return n_; }
    bool is_zero() const { return items_.empty(); }
    const Map& items() const { return items_; }
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }

    void add(const Irred& x, const BigInt& mult = 1);
    IrredSum& operator+=(const IrredSum& other);

    std::string str() const;

    friend bool operator==(const IrredSum&, const IrredSum&) = default;

private:
    int n_;
    Map items_;
};

IrredSum operator+(IrredSum a, const IrredSum& b);
IrredSum scaled(const IrredSum& s, const BigInt& mult);
IrredSum twist(const IrredSum& s, int k);
IrredSum dual(const IrredSum& s);
IrredSum tensor(const IrredSum& a, const IrredSum& b);
IrredSum tensor(const Irred& a, const Irred& b);

BigInt rank(const IrredSum& s);

IrredSum normalize(const BundleExpr& e, int n);

/// Convenience: parse then normalize.
IrredSum bundle(std::string_view text, int n);

/// Irreducible for a Schur functor of a generator (lambda padded with zeros).
Irred schur_irred(const std::vector<int>& lambda, Generator g, int n);

/// S^m Q on G(1,n).
Irred sym_q(int m, int n);

} // namespace grc
