#include "chromsym/expr.hpp"

#include <cctype>
#include <sstream>

namespace chromsym {

namespace {

class Lexer {
public:
    explicit Lexer(const std::string& input) : input_(input) {}

    SourceLocation location() const { return loc_; }

    void skip_ws() {
        while (pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_])))
            advance();
    }

    bool eof() {
        skip_ws();
        return pos_ >= input_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < input_.size() ? input_[pos_] : '\0';
    }

    char get() {
        skip_ws();
        if (pos_ >= input_.size()) throw ParseError("unexpected end of input", loc_);
        const char c = input_[pos_];
        advance();
        return c;
    }

    void expect(char c) {
        const SourceLocation at = peek_location();
        const char got = get();
        if (got != c)
            throw ParseError(std::string("expected '") + c + "', found '" + got + "'", at);
    }

    bool accept(char c) {
        if (peek() == c) {
            get();
            return true;
        }
        return false;
    }

    long long number() {
        const SourceLocation at = peek_location();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected a number", at);
        long long v = 0;
        while (pos_ < input_.size() && std::isdigit(static_cast<unsigned char>(input_[pos_]))) {
            v = v * 10 + (input_[pos_] - '0');
            advance();
        }
        return v;
    }

    SourceLocation peek_location() {
        skip_ws();
        return loc_;
    }

private:
    void advance() {
        if (input_[pos_] == '\n') {
            ++loc_.line;
            loc_.column = 1;
        } else {
            ++loc_.column;
        }
        ++pos_;
    }

    const std::string& input_;
    size_t pos_ = 0;
    SourceLocation loc_;
};

class Parser {
public:
    explicit Parser(const std::string& input) : lex_(input) {}

    ExprPtr parse() {
        ExprPtr e = expression();
        if (!lex_.eof())
            throw ParseError(std::string("unexpected trailing input at '") + lex_.peek() + "'",
                             lex_.peek_location());
        return e;
    }

    Graph parse_graph_only() {
        Graph g = graph_expression();
        if (!lex_.eof())
            throw ParseError(std::string("unexpected trailing input at '") + lex_.peek() + "'",
                             lex_.peek_location());
        return g;
    }

private:
    static ExprPtr make(Expr::Kind kind, SourceLocation loc) {
        auto e = std::make_shared<Expr>();
        e->kind = kind;
        e->loc = loc;
        return e;
    }

    ExprPtr expression() {
        ExprPtr left = term();
        while (true) {
            const SourceLocation at = lex_.peek_location();
            if (lex_.accept('+')) {
                auto e = make(Expr::Kind::add, at);
                std::const_pointer_cast<Expr>(e)->children = {left, term()};
                left = e;
            } else if (lex_.accept('-')) {
                auto e = make(Expr::Kind::sub, at);
                std::const_pointer_cast<Expr>(e)->children = {left, term()};
                left = e;
            } else {
                return left;
            }
        }
    }

    ExprPtr term() {
        ExprPtr left = factor();
        while (true) {
            const SourceLocation at = lex_.peek_location();
            if (lex_.accept('*')) {
                auto e = make(Expr::Kind::mul, at);
                std::const_pointer_cast<Expr>(e)->children = {left, factor()};
                left = e;
            } else {
                return left;
            }
        }
    }

    ExprPtr factor() {
        const SourceLocation at = lex_.peek_location();
        if (lex_.accept('-')) {
            auto e = make(Expr::Kind::neg, at);
            std::const_pointer_cast<Expr>(e)->children = {factor()};
            return e;
        }
        ExprPtr base = primary();
        if (lex_.accept('^')) {
            const SourceLocation pow_at = lex_.peek_location();
            const long long exp = lex_.number();
            auto e = make(Expr::Kind::pow, pow_at);
            auto* node = std::const_pointer_cast<Expr>(e).get();
            node->children = {base};
            node->exponent = static_cast<int>(exp);
            return e;
        }
        return base;
    }

    ExprPtr primary() {
        const SourceLocation at = lex_.peek_location();
        const char c = lex_.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const long long num = lex_.number();
            Rational value(num);
            if (lex_.accept('/')) {
                const SourceLocation den_at = lex_.peek_location();
                const long long den = lex_.number();
                if (den == 0) throw ParseError("zero denominator", den_at);
                value /= den;
            }
            auto e = make(Expr::Kind::constant, at);
            std::const_pointer_cast<Expr>(e)->value = value;
            return e;
        }
        if (c == '(') {
            lex_.expect('(');
            ExprPtr e = expression();
            lex_.expect(')');
            return e;
        }
        if (c == 'X') {
            lex_.get();
            lex_.expect('(');
            Graph g = graph_expression();
            lex_.expect(')');
            auto e = make(Expr::Kind::chromatic_atom, at);
            std::const_pointer_cast<Expr>(e)->graph = std::move(g);
            return e;
        }
        if (c == 'e' || c == 'h' || c == 'm' || c == 'p' || c == 's') {
            lex_.get();
            const BasisName basis = basis_from_letter(c);
            lex_.expect('[');
            if (lex_.peek() == '[') {
                if (basis != BasisName::s)
                    throw ParseError("skew shapes are only valid for the s basis", at);
                const Partition outer = partition_literal();
                Partition inner;
                if (lex_.accept('/')) inner = partition_literal();
                lex_.expect(']');
                if (!outer.contains(inner))
                    throw ParseError("inner partition " + inner.to_string() +
                                         " does not fit inside outer " + outer.to_string(),
                                     at);
                auto e = make(Expr::Kind::skew_atom, at);
                std::const_pointer_cast<Expr>(e)->skew = SkewDiagram(outer, inner);
                return e;
            }
            const Partition lam = partition_body(at);
            lex_.expect(']');
            auto e = make(Expr::Kind::basis_atom, at);
            auto* node = std::const_pointer_cast<Expr>(e).get();
            node->basis = basis;
            node->partition = lam;
            return e;
        }
        throw ParseError(std::string("expected a number, basis atom, X(...), or '(', found '") +
                             c + "'",
                         at);
    }

    // Parts without the surrounding brackets (the caller consumed '[').
    Partition partition_body(SourceLocation at) {
        std::vector<int> parts;
        if (lex_.peek() != ']') {
            parts.push_back(static_cast<int>(lex_.number()));
            while (lex_.accept(',')) parts.push_back(static_cast<int>(lex_.number()));
        }
        for (size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 1) throw ParseError("parts must be positive", at);
            if (i > 0 && parts[i] > parts[i - 1])
                throw ParseError("parts must be weakly decreasing", at);
        }
        return Partition(std::move(parts));
    }

    Partition partition_literal() {
        const SourceLocation at = lex_.peek_location();
        lex_.expect('[');
        Partition p = partition_body(at);
        lex_.expect(']');
        return p;
    }

    Graph graph_expression() {
        Graph g = graph_atom();
        while (lex_.accept('+')) g = g.disjoint_union(graph_atom());
        return g;
    }

    Graph graph_atom() {
        const SourceLocation at = lex_.peek_location();
        const char c = lex_.get();
        if (c == 'K') {
            const long long n = lex_.number();
            if (n < 1) throw ParseError("complete graph requires n >= 1", at);
            return Graph::complete(static_cast<int>(n));
        }
        if (c == 'G') {
            lex_.expect('(');
            const long long n = lex_.number();
            std::vector<std::pair<int, int>> edges;
            if (lex_.accept(';')) {
                if (lex_.peek() != ')') {
                    edges.push_back(edge());
                    while (lex_.accept(',')) edges.push_back(edge());
                }
            }
            lex_.expect(')');
            try {
                return Graph(static_cast<int>(n), std::move(edges));
            } catch (const std::domain_error& e) {
                throw ParseError(e.what(), at);
            }
        }
        throw ParseError(std::string("expected a graph (Kn or G(n; ...)), found '") + c + "'", at);
    }

    std::pair<int, int> edge() {
        const int u = static_cast<int>(lex_.number());
        lex_.expect('-');
        const int v = static_cast<int>(lex_.number());
        return {u, v};
    }

    Lexer lex_;
};

}  // namespace

ExprPtr parse_expression(const std::string& input) { return Parser(input).parse(); }

Graph parse_graph(const std::string& input) { return Parser(input).parse_graph_only(); }

SymFunc evaluate(const Expr& e, const EvalLimits& limits) {
    switch (e.kind) {
        case Expr::Kind::constant:
            return SymFunc::constant(e.value);
        case Expr::Kind::basis_atom:
            return from_basis(e.basis, e.partition);
        case Expr::Kind::skew_atom:
            return skew_schur(*e.skew);
        case Expr::Kind::chromatic_atom:
            try {
                return chromatic_sym(*e.graph, {limits.edge_cap, limits.vertex_cap});
            } catch (const ResourceError& err) {
                throw ResourceError(std::to_string(e.loc.line) + ":" +
                                    std::to_string(e.loc.column) + ": " + err.what());
            }
        case Expr::Kind::add:
            return evaluate(*e.children[0], limits) + evaluate(*e.children[1], limits);
        case Expr::Kind::sub:
            return evaluate(*e.children[0], limits) - evaluate(*e.children[1], limits);
        case Expr::Kind::mul:
            return evaluate(*e.children[0], limits) * evaluate(*e.children[1], limits);
        case Expr::Kind::neg:
            return SymFunc::zero() - evaluate(*e.children[0], limits);
        case Expr::Kind::pow: {
            const SymFunc base = evaluate(*e.children[0], limits);
            SymFunc r = SymFunc::constant(1);
            for (int i = 0; i < e.exponent; ++i) r = r * base;
            return r;
        }
    }
    throw std::logic_error("unreachable expression kind");
}

namespace {

int precedence(Expr::Kind k) {
    switch (k) {
        case Expr::Kind::add:
        case Expr::Kind::sub: return 1;
        case Expr::Kind::mul: return 2;
        case Expr::Kind::neg: return 3;
        case Expr::Kind::pow: return 4;
        default: return 5;
    }
}

void print_node(const Expr& e, std::ostream& os, int parent_prec) {
    const int prec = precedence(e.kind);
    const bool parens = prec < parent_prec;
    if (parens) os << '(';
    switch (e.kind) {
        case Expr::Kind::constant:
            os << rational_to_string(e.value);
            break;
        case Expr::Kind::basis_atom: {
            os << basis_letter(e.basis) << '[';
            const auto& parts = e.partition.parts();
            for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
            os << ']';
            break;
        }
        case Expr::Kind::skew_atom:
            os << "s[" << e.skew->outer().to_string() << '/' << e.skew->inner().to_string()
               << ']';
            break;
        case Expr::Kind::chromatic_atom:
            os << "X(" << e.graph->to_string() << ')';
            break;
        case Expr::Kind::add:
            print_node(*e.children[0], os, prec);
            os << " + ";
            print_node(*e.children[1], os, prec + 1);
            break;
        case Expr::Kind::sub:
            print_node(*e.children[0], os, prec);
            os << " - ";
            print_node(*e.children[1], os, prec + 1);
            break;
        case Expr::Kind::mul:
            print_node(*e.children[0], os, prec);
            os << '*';
            print_node(*e.children[1], os, prec + 1);
            break;
        case Expr::Kind::neg:
            os << '-';
            print_node(*e.children[0], os, prec + 1);
            break;
        case Expr::Kind::pow:
            print_node(*e.children[0], os, prec + 1);
            os << '^' << e.exponent;
            break;
    }
    if (parens) os << ')';
}

// A rational constant prints with a '/', which only parses inside
// parentheses or at the start of a factor; keep it simple and always safe.
void append_term(std::ostream& os, bool first, const Partition& lam, Rational c, char letter) {
    Rational abs = c < 0 ? -c : c;
    if (first) {
        if (c < 0) os << '-';
    } else {
        os << (c < 0 ? " - " : " + ");
    }
    if (lam.empty()) {
        os << rational_to_string(abs);
        return;
    }
    if (abs != 1) os << rational_to_string(abs) << '*';
    os << letter << '[';
    const auto& parts = lam.parts();
    for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << ']';
}

}  // namespace

std::string print_expr(const Expr& e) {
    std::ostringstream os;
    print_node(e, os, 0);
    return os.str();
}

std::string print_coefficients(const std::map<Partition, Rational>& coeffs, BasisName b) {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [lam, c] : coeffs) {
        append_term(os, first, lam, c, basis_letter(b));
        first = false;
    }
    return os.str();
}

std::string print_symfunc(const SymFunc& f, BasisName b) {
    return print_coefficients(to_basis(f, b), b);
}

}  // namespace chromsym
