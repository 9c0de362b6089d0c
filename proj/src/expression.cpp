#include "uq/expression.hpp"

#include "uq/common.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace uq {
namespace detail {

enum class NodeKind { Constant, Variable, Negate, Add, Sub, Mul, Div, Pow, Call };

struct ExprNode {
    NodeKind kind;
    double value = 0.0;            // Constant
    std::size_t var_index = 0;     // Variable
    std::string name;              // Variable / Call
    std::vector<ExprNodePtr> args; // operands

    ExprNode(NodeKind k) : kind(k) {}
};

namespace {

ExprNodePtr make_const(double v) {
    auto n = std::make_shared<ExprNode>(NodeKind::Constant);
    n->value = v;
    return n;
}

ExprNodePtr make_var(std::size_t idx, std::string name) {
    auto n = std::make_shared<ExprNode>(NodeKind::Variable);
    n->var_index = idx;
    n->name = std::move(name);
    return n;
}

ExprNodePtr make_node(NodeKind k, std::vector<ExprNodePtr> args,
                      std::string name = {}) {
    auto n = std::make_shared<ExprNode>(k);
    n->args = std::move(args);
    n->name = std::move(name);
    return n;
}

bool is_const(const ExprNodePtr& n, double v) {
    return n->kind == NodeKind::Constant && n->value == v;
}

// Folding constructors implementing 0*u -> 0, 1*u -> u, u+0 -> u and friends;
// keeps derivative trees small.
ExprNodePtr add(ExprNodePtr a, ExprNodePtr b) {
    if (is_const(a, 0.0)) return b;
    if (is_const(b, 0.0)) return a;
    if (a->kind == NodeKind::Constant && b->kind == NodeKind::Constant)
        return make_const(a->value + b->value);
    return make_node(NodeKind::Add, {std::move(a), std::move(b)});
}

ExprNodePtr sub(ExprNodePtr a, ExprNodePtr b) {
    if (is_const(b, 0.0)) return a;
    if (a->kind == NodeKind::Constant && b->kind == NodeKind::Constant)
        return make_const(a->value - b->value);
    if (is_const(a, 0.0)) return make_node(NodeKind::Negate, {std::move(b)});
    return make_node(NodeKind::Sub, {std::move(a), std::move(b)});
}

ExprNodePtr mul(ExprNodePtr a, ExprNodePtr b) {
    if (is_const(a, 0.0) || is_const(b, 0.0)) return make_const(0.0);
    if (is_const(a, 1.0)) return b;
    if (is_const(b, 1.0)) return a;
    if (a->kind == NodeKind::Constant && b->kind == NodeKind::Constant)
        return make_const(a->value * b->value);
    return make_node(NodeKind::Mul, {std::move(a), std::move(b)});
}

ExprNodePtr div(ExprNodePtr a, ExprNodePtr b) {
    if (is_const(a, 0.0)) return make_const(0.0);
    if (is_const(b, 1.0)) return a;
    return make_node(NodeKind::Div, {std::move(a), std::move(b)});
}

ExprNodePtr neg(ExprNodePtr a) {
    if (a->kind == NodeKind::Constant) return make_const(-a->value);
    return make_node(NodeKind::Negate, {std::move(a)});
}

ExprNodePtr pow_node(ExprNodePtr a, ExprNodePtr b) {
    if (is_const(b, 1.0)) return a;
    return make_node(NodeKind::Pow, {std::move(a), std::move(b)});
}

ExprNodePtr call(std::string fn, std::vector<ExprNodePtr> args) {
    return make_node(NodeKind::Call, std::move(args), std::move(fn));
}

struct FunctionInfo {
    const char* name;
    std::size_t arity;
};
constexpr FunctionInfo kFunctions[] = {
    {"sin", 1}, {"cos", 1}, {"tan", 1}, {"exp", 1},  {"log", 1},
    {"sqrt", 1}, {"abs", 1}, {"tanh", 1}, {"min", 2}, {"max", 2}};

const FunctionInfo* find_function(const std::string& name) {
    for (const auto& f : kFunctions)
        if (name == f.name) return &f;
    return nullptr;
}

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& names)
        : text_(text), names_(names) {}

    ExprNodePtr run() {
        skip_ws();
        if (pos_ >= text_.size())
            throw ParseError("empty expression", pos_);
        ExprNodePtr e = parse_expr();
        skip_ws();
        if (pos_ < text_.size())
            throw ParseError("unexpected trailing input", pos_);
        return e;
    }

private:
    const std::string& text_;
    const std::vector<std::string>& names_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    ExprNodePtr parse_expr() {
        ExprNodePtr e = parse_term();
        for (;;) {
            if (accept('+')) e = make_node(NodeKind::Add, {e, parse_term()});
            else if (accept('-')) e = make_node(NodeKind::Sub, {e, parse_term()});
            else return e;
        }
    }

    ExprNodePtr parse_term() {
        ExprNodePtr e = parse_unary();
        for (;;) {
            if (accept('*')) e = make_node(NodeKind::Mul, {e, parse_unary()});
            else if (accept('/')) e = make_node(NodeKind::Div, {e, parse_unary()});
            else return e;
        }
    }

    // unary minus binds below ^ : -x^2 parses as -(x^2)
    ExprNodePtr parse_unary() {
        if (accept('-')) return make_node(NodeKind::Negate, {parse_unary()});
        if (accept('+')) return parse_unary();
        return parse_power();
    }

    ExprNodePtr parse_power() {
        ExprNodePtr base = parse_atom();
        if (accept('^')) return make_node(NodeKind::Pow, {base, parse_unary()});
        return base;
    }

    ExprNodePtr parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            ExprNodePtr e = parse_expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
            return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
            return parse_identifier();
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    ExprNodePtr parse_number() {
        const char* begin = text_.c_str() + pos_;
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin) throw ParseError("malformed number", pos_);
        pos_ += static_cast<std::size_t>(end - begin);
        return make_const(v);
    }

    ExprNodePtr parse_identifier() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        const std::string name = text_.substr(start, pos_ - start);
        if (peek() == '(') {
            const FunctionInfo* fn = find_function(name);
            if (!fn)
                throw InvalidArgument("unknown function '" + name + "'");
            accept('(');
            std::vector<ExprNodePtr> args;
            if (peek() != ')') {
                args.push_back(parse_expr());
                while (accept(',')) args.push_back(parse_expr());
            }
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            if (args.size() != fn->arity)
                throw InvalidArgument("function '" + name + "' expects " +
                                      std::to_string(fn->arity) + " argument(s)");
            return call(name, std::move(args));
        }
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return make_var(i, name);
        throw InvalidArgument("unknown identifier '" + name + "'");
    }
};

double eval_node(const ExprNode& n, std::span<const double> x) {
    switch (n.kind) {
        case NodeKind::Constant: return n.value;
        case NodeKind::Variable: return x[n.var_index];
        case NodeKind::Negate: return -eval_node(*n.args[0], x);
        case NodeKind::Add:
            return eval_node(*n.args[0], x) + eval_node(*n.args[1], x);
        case NodeKind::Sub:
            return eval_node(*n.args[0], x) - eval_node(*n.args[1], x);
        case NodeKind::Mul:
            return eval_node(*n.args[0], x) * eval_node(*n.args[1], x);
        case NodeKind::Div: {
            const double b = eval_node(*n.args[1], x);
            if (b == 0.0) throw EvaluationError("division by zero");
            return eval_node(*n.args[0], x) / b;
        }
        case NodeKind::Pow: {
            const double a = eval_node(*n.args[0], x);
            const double b = eval_node(*n.args[1], x);
            const double r = std::pow(a, b);
            if (std::isnan(r))
                throw EvaluationError("pow domain error (base " +
                                      std::to_string(a) + ", exponent " +
                                      std::to_string(b) + ")");
            return r;
        }
        case NodeKind::Call: {
            const double a = eval_node(*n.args[0], x);
            if (n.name == "sin") return std::sin(a);
            if (n.name == "cos") return std::cos(a);
            if (n.name == "tan") return std::tan(a);
            if (n.name == "exp") return std::exp(a);
            if (n.name == "log") {
                if (a <= 0.0)
                    throw EvaluationError("log of non-positive value " +
                                          std::to_string(a));
                return std::log(a);
            }
            if (n.name == "sqrt") {
                if (a < 0.0)
                    throw EvaluationError("sqrt of negative value " +
                                          std::to_string(a));
                return std::sqrt(a);
            }
            if (n.name == "abs") return std::abs(a);
            if (n.name == "tanh") return std::tanh(a);
            const double b = eval_node(*n.args[1], x);
            if (n.name == "min") return std::min(a, b);
            if (n.name == "max") return std::max(a, b);
            throw EvaluationError("unknown function '" + n.name + "'");
        }
    }
    throw EvaluationError("corrupt expression node");
}

ExprNodePtr diff_node(const ExprNodePtr& n, std::size_t idx) {
    switch (n->kind) {
        case NodeKind::Constant: return make_const(0.0);
        case NodeKind::Variable:
            return make_const(n->var_index == idx ? 1.0 : 0.0);
        case NodeKind::Negate: return neg(diff_node(n->args[0], idx));
        case NodeKind::Add:
            return add(diff_node(n->args[0], idx), diff_node(n->args[1], idx));
        case NodeKind::Sub:
            return sub(diff_node(n->args[0], idx), diff_node(n->args[1], idx));
        case NodeKind::Mul:
            return add(mul(diff_node(n->args[0], idx), n->args[1]),
                       mul(n->args[0], diff_node(n->args[1], idx)));
        case NodeKind::Div: {
            // (u/v)' = u'/v - u v'/v^2
            auto du = diff_node(n->args[0], idx);
            auto dv = diff_node(n->args[1], idx);
            return sub(div(du, n->args[1]),
                       div(mul(n->args[0], dv),
                           pow_node(n->args[1], make_const(2.0))));
        }
        case NodeKind::Pow: {
            const auto& u = n->args[0];
            const auto& v = n->args[1];
            auto du = diff_node(u, idx);
            auto dv = diff_node(v, idx);
            if (is_const(dv, 0.0)) {
                // (u^c)' = c u^{c-1} u'
                if (v->kind == NodeKind::Constant)
                    return mul(mul(v, pow_node(u, make_const(v->value - 1.0))), du);
                return mul(mul(v, pow_node(u, sub(v, make_const(1.0)))), du);
            }
            // general: u^v (v' log u + v u'/u)
            auto t = add(mul(dv, call("log", {u})), div(mul(v, du), u));
            return mul(pow_node(u, v), t);
        }
        case NodeKind::Call: {
            const auto& u = n->args[0];
            auto du = diff_node(u, idx);
            if (n->name == "sin") return mul(call("cos", {u}), du);
            if (n->name == "cos") return neg(mul(call("sin", {u}), du));
            if (n->name == "tan") {
                // 1 + tan^2
                auto sec2 = add(make_const(1.0),
                                pow_node(call("tan", {u}), make_const(2.0)));
                return mul(sec2, du);
            }
            if (n->name == "exp") return mul(call("exp", {u}), du);
            if (n->name == "log") return div(du, u);
            if (n->name == "sqrt")
                return div(du, mul(make_const(2.0), call("sqrt", {u})));
            if (n->name == "tanh") {
                auto sech2 = sub(make_const(1.0),
                                 pow_node(call("tanh", {u}), make_const(2.0)));
                return mul(sech2, du);
            }
            throw EvaluationError("cannot differentiate '" + n->name + "'");
        }
    }
    throw EvaluationError("corrupt expression node");
}

void print_node(const ExprNode& n, std::ostream& os) {
    switch (n.kind) {
        case NodeKind::Constant: os << format_double_expr(n.value); return;
        case NodeKind::Variable: os << n.name; return;
        case NodeKind::Negate:
            os << "(-";
            print_node(*n.args[0], os);
            os << ")";
            return;
        case NodeKind::Add:
        case NodeKind::Sub:
        case NodeKind::Mul:
        case NodeKind::Div:
        case NodeKind::Pow: {
            const char* op = n.kind == NodeKind::Add   ? "+"
                             : n.kind == NodeKind::Sub ? "-"
                             : n.kind == NodeKind::Mul ? "*"
                             : n.kind == NodeKind::Div ? "/"
                                                       : "^";
            os << "(";
            print_node(*n.args[0], os);
            os << op;
            print_node(*n.args[1], os);
            os << ")";
            return;
        }
        case NodeKind::Call: {
            os << n.name << "(";
            for (std::size_t i = 0; i < n.args.size(); ++i) {
                if (i) os << ",";
                print_node(*n.args[i], os);
            }
            os << ")";
            return;
        }
    }
}

} // namespace
} // namespace detail

Expression Expression::parse(const std::string& text,
                             const std::vector<std::string>& input_names) {
    detail::Parser p(text, input_names);
    return Expression(p.run(), input_names);
}

Expression Expression::constant(double value,
                                const std::vector<std::string>& input_names) {
    return Expression(detail::make_const(value), input_names);
}

double Expression::evaluate(std::span<const double> x) const {
    if (!root_) throw EvaluationError("empty expression");
    if (x.size() < input_names_.size())
        throw InvalidArgument("Expression::evaluate: input dimension mismatch");
    return detail::eval_node(*root_, x);
}

Expression Expression::derivative(std::size_t index) const {
    if (!root_) throw EvaluationError("empty expression");
    return Expression(detail::diff_node(root_, index), input_names_);
}

std::vector<Expression> Expression::gradient() const {
    std::vector<Expression> g;
    g.reserve(input_names_.size());
    for (std::size_t i = 0; i < input_names_.size(); ++i)
        g.push_back(derivative(i));
    return g;
}

std::string Expression::to_string() const {
    if (!root_) return "";
    std::ostringstream os;
    detail::print_node(*root_, os);
    return os.str();
}

} // namespace uq
