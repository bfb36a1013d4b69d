#include "grasscohom/expr.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>

namespace grc {

std::string to_string(Generator g)
{
    switch (g) {
    case Generator::Q:
        return "Q";
    case Generator::S:
        return "S";
    case Generator::QDual:
        return "dual(Q)";
    case Generator::SDual:
        return "dual(S)";
    }
    return "?";
}

namespace make {
namespace {
ExprPtr wrap(BundleExpr::Node n) { return std::make_shared<const BundleExpr>(BundleExpr{std::move(n)}); }
} // namespace
ExprPtr line(int k) { return wrap(node::LineBundle{k}); }
ExprPtr gen(Generator g) { return wrap(node::Gen{g}); }
ExprPtr sym(int j, Generator g) { return wrap(node::Sym{j, g}); }
ExprPtr wedge(int j, Generator g) { return wrap(node::Wedge{j, g}); }
ExprPtr schur(std::vector<int> lambda, Generator g) { return wrap(node::Schur{std::move(lambda), g}); }
ExprPtr twist(ExprPtr e, int k) { return wrap(node::Twist{std::move(e), k}); }
ExprPtr dual(ExprPtr e) { return wrap(node::Dual{std::move(e)}); }
ExprPtr tensor(ExprPtr a, ExprPtr b) { return wrap(node::Tensor{std::move(a), std::move(b)}); }
ExprPtr sum(ExprPtr a, ExprPtr b) { return wrap(node::Sum{std::move(a), std::move(b)}); }
ExprPtr scale(long mult, ExprPtr e) { return wrap(node::Scale{mult, std::move(e)}); }
} // namespace make

bool structurally_equal(const BundleExpr& a, const BundleExpr& b)
{
    if (a.node.index() != b.node.index())
        return false;
    return std::visit(
        [&](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            const auto& y = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, node::LineBundle>)
                return x.k == y.k;
            else if constexpr (std::is_same_v<T, node::Gen>)
                return x.g == y.g;
            else if constexpr (std::is_same_v<T, node::Sym> || std::is_same_v<T, node::Wedge>)
                return x.j == y.j && x.g == y.g;
            else if constexpr (std::is_same_v<T, node::Schur>)
                return x.lambda == y.lambda && x.g == y.g;
            else if constexpr (std::is_same_v<T, node::Twist>)
                return x.k == y.k && structurally_equal(*x.e, *y.e);
            else if constexpr (std::is_same_v<T, node::Dual>)
                return structurally_equal(*x.e, *y.e);
            else if constexpr (std::is_same_v<T, node::Tensor> || std::is_same_v<T, node::Sum>)
                return structurally_equal(*x.a, *y.a) && structurally_equal(*x.b, *y.b);
            else
                return x.mult == y.mult && structurally_equal(*x.e, *y.e);
        },
        a.node);
}

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)), position_(position)
{
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
public:
    explicit Parser(std::string_view text)
    {
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (std::isspace(static_cast<unsigned char>(text[i])))
                continue;
            src_.push_back(text[i]);
            pos_map_.push_back(i);
        }
        pos_map_.push_back(text.size());
    }

    ExprPtr parse_all()
    {
        if (src_.empty())
            fail("empty expression");
        ExprPtr e = expr();
        if (i_ != src_.size())
            fail(std::string("unexpected '") + src_[i_] + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_map_[i_]); }

    bool at_end() const { return i_ >= src_.size(); }
    char peek() const { return at_end() ? '\0' : src_[i_]; }

    bool starts_with(std::string_view s) const { return std::string_view(src_).substr(i_).starts_with(s); }

    bool accept(std::string_view s)
    {
        if (!starts_with(s))
            return false;
        i_ += s.size();
        return true;
    }

    void expect(std::string_view s)
    {
        if (!accept(s))
            fail("expected '" + std::string(s) + "'");
    }

    long integer(bool allow_sign)
    {
        std::size_t start = i_;
        if (allow_sign && (peek() == '-' || peek() == '+'))
            ++i_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
            i_ = start;
            fail(allow_sign ? "expected integer" : "expected natural number");
        }
        while (std::isdigit(static_cast<unsigned char>(peek())))
            ++i_;
        const char* first = src_.data() + start;
        if (*first == '+')
            ++first;
        long value = 0;
        auto [ptr, ec] = std::from_chars(first, src_.data() + i_, value);
        if (ec != std::errc() || value > std::numeric_limits<int>::max() ||
            value < std::numeric_limits<int>::min()) {
            i_ = start;
            fail("integer out of range");
        }
        return value;
    }

    ExprPtr expr()
    {
        ExprPtr e = term();
        while (accept("+"))
            e = make::sum(e, term());
        return e;
    }

    ExprPtr term()
    {
        ExprPtr e = factor();
        while (accept("*"))
            e = make::tensor(e, factor());
        return e;
    }

    ExprPtr factor()
    {
        std::optional<long> mult;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            mult = integer(false);
            expect("*");
        }
        ExprPtr e = postfix(atom());
        return mult ? make::scale(*mult, e) : e;
    }

    ExprPtr postfix(ExprPtr e)
    {
        while (accept("(")) {
            int k = static_cast<int>(integer(true));
            expect(")");
            e = make::twist(e, k);
        }
        return e;
    }

    ExprPtr atom()
    {
        if (accept("O")) {
            if (accept("(")) {
                int k = static_cast<int>(integer(true));
                expect(")");
                return make::line(k);
            }
            return make::line(0);
        }
        if (accept("dual(")) {
            if (accept("Q)"))
                return make::gen(Generator::QDual);
            if (accept("S)"))
                return make::gen(Generator::SDual);
            ExprPtr inner = expr();
            expect(")");
            return make::dual(inner);
        }
        if (accept("sym^")) {
            int j = static_cast<int>(integer(false));
            return make::sym(j, generator_arg());
        }
        if (accept("wedge^")) {
            int j = static_cast<int>(integer(false));
            return make::wedge(j, generator_arg());
        }
        if (accept("schur[")) {
            std::vector<int> lambda{static_cast<int>(integer(true))};
            while (accept(","))
                lambda.push_back(static_cast<int>(integer(true)));
            expect("]");
            return make::schur(std::move(lambda), generator_arg());
        }
        if (accept("Q"))
            return make::gen(Generator::Q);
        if (accept("S"))
            return make::gen(Generator::S);
        if (accept("(")) {
            ExprPtr inner = expr();
            expect(")");
            return inner;
        }
        if (at_end())
            fail("unexpected end of expression");
        fail(std::string("unexpected '") + peek() + "'");
    }

    Generator generator_arg()
    {
        expect("(");
        static const std::pair<std::string_view, Generator> gens[] = {
            {"dual(Q))", Generator::QDual},
            {"dual(S))", Generator::SDual},
            {"Q)", Generator::Q},
            {"S)", Generator::S},
        };
        for (const auto& [text, g] : gens)
            if (accept(text))
                return g;
        // Only a well-formed argument counts as plethysm; syntax errors win.
        const std::size_t at = pos_map_[i_];
        expr();
        expect(")");
        throw ValidationError("plethysm not supported: Schur functors apply only to Q, S, dual(Q), dual(S) (at position " +
                              std::to_string(at) + ")");
    }

    std::string src_;
    std::vector<std::size_t> pos_map_;
    std::size_t i_ = 0;
};

int generator_rank(Generator g, int n)
{
    return (g == Generator::Q || g == Generator::QDual) ? 2 : n - 1;
}

} // namespace

ExprPtr parse(std::string_view text, int n)
{
    if (n < 2)
        throw ValidationError("n must be >= 2");
    ExprPtr e = Parser(text).parse_all();
    validate(*e, n);
    return e;
}

void validate(const BundleExpr& e, int n)
{
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, node::Sym>) {
                if (x.j < 0)
                    throw ValidationError("sym^j needs j >= 0");
            } else if constexpr (std::is_same_v<T, node::Wedge>) {
                const int r = generator_rank(x.g, n);
                if (x.j < 0 || x.j > r)
                    throw ValidationError("wedge^" + std::to_string(x.j) + "(" + to_string(x.g) +
                                          ") exceeds rank " + std::to_string(r));
            } else if constexpr (std::is_same_v<T, node::Schur>) {
                const int r = generator_rank(x.g, n);
                if (x.lambda.empty() || static_cast<int>(x.lambda.size()) > r)
                    throw ValidationError("schur weight on " + to_string(x.g) + " must have length 1.." +
                                          std::to_string(r));
                schur_irred(x.lambda, x.g, n);
            } else if constexpr (std::is_same_v<T, node::Twist>) {
                validate(*x.e, n);
            } else if constexpr (std::is_same_v<T, node::Dual>) {
                validate(*x.e, n);
            } else if constexpr (std::is_same_v<T, node::Tensor> || std::is_same_v<T, node::Sum>) {
                validate(*x.a, n);
                validate(*x.b, n);
            } else if constexpr (std::is_same_v<T, node::Scale>) {
                if (x.mult < 1)
                    throw ValidationError("scale multiplicity must be >= 1");
                validate(*x.e, n);
            }
        },
        e.node);
}

// ---------------------------------------------------------------------------
// Printer

namespace {

std::string print_postfix(const BundleExpr& e);

std::string print_factor(const BundleExpr& e)
{
    if (const auto* s = std::get_if<node::Scale>(&e.node))
        return std::to_string(s->mult) + "*" + print_postfix(*s->e);
    return print_postfix(e);
}

std::string print_term(const BundleExpr& e)
{
    if (const auto* t = std::get_if<node::Tensor>(&e.node))
        return print_term(*t->a) + "*" + print_factor(*t->b);
    return print_factor(e);
}

std::string print_postfix(const BundleExpr& e)
{
    return std::visit(
        [&](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, node::LineBundle>) {
                return "O(" + std::to_string(x.k) + ")";
            } else if constexpr (std::is_same_v<T, node::Gen>) {
                return to_string(x.g);
            } else if constexpr (std::is_same_v<T, node::Sym>) {
                return "sym^" + std::to_string(x.j) + "(" + to_string(x.g) + ")";
            } else if constexpr (std::is_same_v<T, node::Wedge>) {
                return "wedge^" + std::to_string(x.j) + "(" + to_string(x.g) + ")";
            } else if constexpr (std::is_same_v<T, node::Schur>) {
                std::string out = "schur[";
                for (std::size_t i = 0; i < x.lambda.size(); ++i)
                    out += (i ? "," : "") + std::to_string(x.lambda[i]);
                return out + "](" + to_string(x.g) + ")";
            } else if constexpr (std::is_same_v<T, node::Twist>) {
                return print_postfix(*x.e) + "(" + std::to_string(x.k) + ")";
            } else if constexpr (std::is_same_v<T, node::Dual>) {
                // dual(Q) and dual(S) are generators; keep the composite reading.
                if (const auto* g = std::get_if<node::Gen>(&x.e->node);
                    g && (g->g == Generator::Q || g->g == Generator::S))
                    return "dual((" + to_string(g->g) + "))";
                return "dual(" + print(*x.e) + ")";
            } else {
                return "(" + print(e) + ")";
            }
        },
        e.node);
}

} // namespace

std::string print(const BundleExpr& e)
{
    if (const auto* s = std::get_if<node::Sum>(&e.node))
        return print(*s->a) + "+" + print_term(*s->b);
    return print_term(e);
}

// ---------------------------------------------------------------------------
// IrredSum

IrredSum::IrredSum(const Irred& x, const BigInt& mult) : n_(x.n)
{
    add(x, mult);
}

void IrredSum::add(const Irred& x, const BigInt& mult)
{
    if (x.n != n_)
        throw std::invalid_argument("IrredSum: mixed n");
    if (mult < 0)
        throw std::invalid_argument("IrredSum: negative multiplicity");
    if (mult == 0)
        return;
    items_[x] += mult;
}

IrredSum& IrredSum::operator+=(const IrredSum& other)
{
    if (other.n_ != n_)
        throw std::invalid_argument("IrredSum: mixed n");
    for (const auto& [x, m] : other.items_)
        add(x, m);
    return *this;
}

std::string IrredSum::str() const
{
    if (items_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [x, m] : items_) {
        os << (first ? "" : " + ");
        if (m != 1)
            os << m.get_str() << "*";
        os << x.str();
        first = false;
    }
    return os.str();
}

IrredSum operator+(IrredSum a, const IrredSum& b)
{
    a += b;
    return a;
}

IrredSum scaled(const IrredSum& s, const BigInt& mult)
{
    IrredSum out(s.n());
    for (const auto& [x, m] : s)
        out.add(x, m * mult);
    return out;
}

IrredSum twist(const IrredSum& s, int k)
{
    IrredSum out(s.n());
    for (const auto& [x, m] : s)
        out.add(twist(x, k), m);
    return out;
}

IrredSum dual(const IrredSum& s)
{
    IrredSum out(s.n());
    for (const auto& [x, m] : s)
        out.add(dual_irred(x), m);
    return out;
}

IrredSum tensor(const Irred& a, const Irred& b)
{
    if (a.n != b.n)
        throw std::invalid_argument("tensor: mixed n");
    IrredSum out(a.n);
    const WeightMultiset alphas = tensor_weights(a.alpha, b.alpha);
    const WeightMultiset betas = tensor_weights(a.beta, b.beta);
    for (const auto& [al, ma] : alphas)
        for (const auto& [be, mb] : betas)
            out.add(Irred(a.n, al, be), ma * mb);
    return out;
}

IrredSum tensor(const IrredSum& a, const IrredSum& b)
{
    if (a.n() != b.n())
        throw std::invalid_argument("tensor: mixed n");
    IrredSum out(a.n());
    for (const auto& [x, mx] : a)
        for (const auto& [y, my] : b)
            out += scaled(tensor(x, y), mx * my);
    return out;
}

BigInt rank(const IrredSum& s)
{
    BigInt r = 0;
    for (const auto& [x, m] : s)
        r += m * x.rank();
    return r;
}

Irred schur_irred(const std::vector<int>& lambda, Generator g, int n)
{
    const bool q_side = g == Generator::Q || g == Generator::QDual;
    const std::size_t r = q_side ? 2 : static_cast<std::size_t>(n - 1);
    if (lambda.empty() || lambda.size() > r)
        throw ValidationError("schur weight has wrong length for " + to_string(g));
    std::vector<int> padded(lambda);
    padded.resize(r, 0);
    GLWeight w = [&] {
        try {
            return GLWeight(padded);
        } catch (const std::invalid_argument&) {
            throw ValidationError("schur weight must be nonincreasing after padding with zeros");
        }
    }();
    const GLWeight trivial_q = GLWeight::constant(2, 0);
    const GLWeight trivial_s = GLWeight::constant(static_cast<std::size_t>(n - 1), 0);
    switch (g) {
    case Generator::Q:
        return Irred(n, w, trivial_s);
    case Generator::QDual:
        return Irred(n, dual_weight(w), trivial_s);
    case Generator::S:
        return Irred(n, trivial_q, dual_weight(w));
    case Generator::SDual:
        return Irred(n, trivial_q, w);
    }
    throw ValidationError("unknown generator");
}

Irred sym_q(int m, int n)
{
    return schur_irred({m}, Generator::Q, n);
}

IrredSum normalize(const BundleExpr& e, int n)
{
    return std::visit(
        [&](const auto& x) -> IrredSum {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, node::LineBundle>) {
                return IrredSum(Irred::line_bundle(n, x.k));
            } else if constexpr (std::is_same_v<T, node::Gen>) {
                return IrredSum(schur_irred({1}, x.g, n));
            } else if constexpr (std::is_same_v<T, node::Sym>) {
                return IrredSum(schur_irred({x.j}, x.g, n));
            } else if constexpr (std::is_same_v<T, node::Wedge>) {
                if (x.j == 0)
                    return IrredSum(Irred::line_bundle(n, 0));
                return IrredSum(schur_irred(std::vector<int>(static_cast<std::size_t>(x.j), 1), x.g, n));
            } else if constexpr (std::is_same_v<T, node::Schur>) {
                return IrredSum(schur_irred(x.lambda, x.g, n));
            } else if constexpr (std::is_same_v<T, node::Twist>) {
                return twist(normalize(*x.e, n), x.k);
            } else if constexpr (std::is_same_v<T, node::Dual>) {
                return dual(normalize(*x.e, n));
            } else if constexpr (std::is_same_v<T, node::Tensor>) {
                return tensor(normalize(*x.a, n), normalize(*x.b, n));
            } else if constexpr (std::is_same_v<T, node::Sum>) {
                return normalize(*x.a, n) + normalize(*x.b, n);
            } else {
                return scaled(normalize(*x.e, n), x.mult);
            }
        },
        e.node);
}

IrredSum bundle(std::string_view text, int n)
{
    return normalize(*parse(text, n), n);
}

} // namespace grc
