#include "hopfdual/diagram.hpp"

#include <sstream>

namespace hopfdual {

SyntaxError::SyntaxError(int line_, int column_, const std::string& what)
    : std::runtime_error("syntax error at " + std::to_string(line_) + ":" +
                         std::to_string(column_) + ": " + what),
      line(line_), column(column_) {}

namespace {

struct Token {
    enum class Kind { Name, Dot, Star, LBrack, RBrack, Comma, LParen, RParen, End };
    Kind kind;
    std::string text;
    int line, col;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }
    const Token& peek() const { return tok_; }
    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    const std::string& src_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;

    void advance() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
                continue;
            }
            if (c == '\n') { ++line_; col_ = 1; ++pos_; continue; }
            if (c == ' ' || c == '\t' || c == '\r') { ++col_; ++pos_; continue; }
            break;
        }
        int l = line_, co = col_;
        if (pos_ >= src_.size()) {
            tok_ = {Token::Kind::End, "", l, co};
            return;
        }
        char c = src_[pos_];
        auto single = [&](Token::Kind k) {
            ++pos_; ++col_;
            tok_ = {k, std::string(1, c), l, co};
        };
        switch (c) {
            case '.': return single(Token::Kind::Dot);
            case '*': return single(Token::Kind::Star);
            case '[': return single(Token::Kind::LBrack);
            case ']': return single(Token::Kind::RBrack);
            case ',': return single(Token::Kind::Comma);
            case '(': return single(Token::Kind::LParen);
            case ')': return single(Token::Kind::RParen);
            default: break;
        }
        if (isalpha((unsigned char)c) || c == '_') {
            size_t start = pos_;
            while (pos_ < src_.size() &&
                   (isalnum((unsigned char)src_[pos_]) || src_[pos_] == '_')) {
                ++pos_; ++col_;
            }
            tok_ = {Token::Kind::Name, src_.substr(start, pos_ - start), l, co};
            return;
        }
        throw SyntaxError(l, co, std::string("unexpected character '") + c + "'");
    }
};

class Parser {
public:
    explicit Parser(const std::string& src) : lex_(src) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::End)
            throw SyntaxError(t.line, t.col, "trailing input '" + t.text + "'");
        return e;
    }

private:
    Lexer lex_;

    ExprPtr expr() {
        ExprPtr acc = tensor();
        while (lex_.peek().kind == Token::Kind::Dot) {
            lex_.next();
            ExprPtr rhs = tensor();
            auto n = std::make_shared<DiagramExpr>();
            n->kind = DiagramExpr::Kind::Compose;
            n->upper = acc;  // textual left is the upper part of the diagram
            n->lower = rhs;
            acc = n;
        }
        return acc;
    }

    ExprPtr tensor() {
        ExprPtr acc = atom();
        while (lex_.peek().kind == Token::Kind::Star) {
            lex_.next();
            ExprPtr rhs = atom();
            auto n = std::make_shared<DiagramExpr>();
            n->kind = DiagramExpr::Kind::Tensor;
            n->left = acc;
            n->right = rhs;
            acc = n;
        }
        return acc;
    }

    ExprPtr atom() {
        const Token t = lex_.next();
        if (t.kind == Token::Kind::LParen) {
            ExprPtr e = expr();
            const Token close = lex_.next();
            if (close.kind != Token::Kind::RParen)
                throw SyntaxError(close.line, close.col, "expected ')'");
            return e;
        }
        if (t.kind != Token::Kind::Name)
            throw SyntaxError(t.line, t.col,
                              t.kind == Token::Kind::End ? "unexpected end of input"
                                                         : "expected a name, got '" + t.text + "'");
        std::vector<std::string> args;
        if (lex_.peek().kind == Token::Kind::LBrack) {
            lex_.next();
            while (true) {
                const Token a = lex_.next();
                if (a.kind != Token::Kind::Name)
                    throw SyntaxError(a.line, a.col, "expected a space name");
                args.push_back(a.text);
                const Token sep = lex_.next();
                if (sep.kind == Token::Kind::RBrack) break;
                if (sep.kind != Token::Kind::Comma)
                    throw SyntaxError(sep.line, sep.col, "expected ',' or ']'");
            }
        }
        auto n = std::make_shared<DiagramExpr>();
        if (t.text == "id") {
            if (args.size() != 1)
                throw SyntaxError(t.line, t.col, "id takes exactly one space argument");
            n->kind = DiagramExpr::Kind::Identity;
            n->space = args[0];
        } else {
            n->kind = DiagramExpr::Kind::Generator;
            n->name = t.text;
            n->args = std::move(args);
        }
        return n;
    }
};

std::string render_name(const std::string& name, const std::vector<std::string>& args) {
    if (args.empty()) return name;
    std::string out = name + "[";
    for (size_t i = 0; i < args.size(); ++i) {
        if (i) out += ",";
        out += args[i];
    }
    return out + "]";
}

void print_rec(const ExprPtr& e, std::ostream& os, bool parenthesize_compose) {
    switch (e->kind) {
        case DiagramExpr::Kind::Generator:
            os << render_name(e->name, e->args);
            break;
        case DiagramExpr::Kind::Identity:
            os << "id[" << e->space << "]";
            break;
        case DiagramExpr::Kind::Tensor:
            // '*' binds tighter than '.', so compose children need parens
            print_rec(e->left, os, true);
            os << " * ";
            // keep right-nested tensors parenthesized so the left-assoc
            // parse reproduces this exact tree
            if (e->right->kind == DiagramExpr::Kind::Tensor) {
                os << "(";
                print_rec(e->right, os, true);
                os << ")";
            } else {
                print_rec(e->right, os, true);
            }
            break;
        case DiagramExpr::Kind::Compose:
            if (parenthesize_compose) os << "(";
            print_rec(e->upper, os, false);
            os << " . ";
            if (e->lower->kind == DiagramExpr::Kind::Compose) {
                os << "(";
                print_rec(e->lower, os, false);
                os << ")";
            } else {
                print_rec(e->lower, os, true);
            }
            if (parenthesize_compose) os << ")";
            break;
    }
}

} // namespace

ExprPtr parse_expr(const std::string& source) { return Parser(source).parse(); }

std::string print_expr(const ExprPtr& e) {
    std::ostringstream os;
    print_rec(e, os, false);
    return os.str();
}

void Environment::add_space(const Space& s) {
    auto it = spaces_.find(s.name);
    if (it != spaces_.end()) {
        if (it->second.dim != s.dim)
            throw TypeError("space " + s.name + " re-registered with a different dimension");
        return;
    }
    spaces_.emplace(s.name, s);
}

bool Environment::has_space(const std::string& name) const { return spaces_.count(name) > 0; }

const Space& Environment::space(const std::string& name) const {
    auto it = spaces_.find(name);
    if (it == spaces_.end()) throw LookupError("unknown space " + name);
    return it->second;
}

void Environment::bind(const std::string& key, Morphism m) {
    for (const Space& s : m.codomain()) add_space(s);
    for (const Space& s : m.domain()) add_space(s);
    gens_.insert_or_assign(key, std::move(m));
}

bool Environment::has_generator(const std::string& key) const { return gens_.count(key) > 0; }

const Morphism& Environment::generator(const std::string& key) const {
    auto it = gens_.find(key);
    if (it == gens_.end()) throw LookupError("unbound generator " + key);
    return it->second;
}

void Environment::register_braiding(const std::string& x, const std::string& y,
                                    Morphism c, Morphism c_inv) {
    if (!c_inv.compose(c).is_identity() || !c.compose(c_inv).is_identity())
        throw TypeError("braiding for (" + x + "," + y + ") is not invertible by the given inverse");
    braids_.insert_or_assign({x, y}, std::make_pair(std::move(c), std::move(c_inv)));
}

bool Environment::has_braiding(const std::string& x, const std::string& y) const {
    return braids_.count({x, y}) > 0;
}

std::pair<Morphism, Morphism> Environment::braiding(const std::string& x,
                                                    const std::string& y) const {
    auto it = braids_.find({x, y});
    if (it != braids_.end()) return it->second;
    if (!flip_fallback_)
        throw LookupError("no braiding registered for (" + x + "," + y + ")");
    const Space& sx = space(x);
    const Space& sy = space(y);
    Morphism c = Morphism::flip(sx, sy);
    Morphism cinv = Morphism::flip(sy, sx);
    return {c, cinv};
}

namespace {

std::string wires(const SpaceList& s) { return space_list_to_string(s); }

ExprPtr annotate(const ExprPtr& e, const Environment& env) {
    auto n = std::make_shared<DiagramExpr>(*e);
    switch (e->kind) {
        case DiagramExpr::Kind::Identity: {
            const Space& s = env.space(e->space);
            n->dom = SpaceList{s};
            n->cod = SpaceList{s};
            break;
        }
        case DiagramExpr::Kind::Generator: {
            if (e->name == "braid" || e->name == "braidinv") {
                if (e->args.size() != 2)
                    throw TypeError(e->name + " takes two space arguments");
                const Space& x = env.space(e->args[0]);
                const Space& y = env.space(e->args[1]);
                if (e->name == "braid") {
                    n->dom = SpaceList{x, y};
                    n->cod = SpaceList{y, x};
                } else {  // c^{-1}_{X,Y} : Y ox X -> X ox Y
                    n->dom = SpaceList{y, x};
                    n->cod = SpaceList{x, y};
                }
                break;
            }
            const Morphism& m = env.generator(render_name(e->name, e->args));
            n->dom = m.domain();
            n->cod = m.codomain();
            break;
        }
        case DiagramExpr::Kind::Tensor: {
            ExprPtr l = annotate(e->left, env);
            ExprPtr r = annotate(e->right, env);
            SpaceList dom = *l->dom, cod = *l->cod;
            dom.insert(dom.end(), r->dom->begin(), r->dom->end());
            cod.insert(cod.end(), r->cod->begin(), r->cod->end());
            n->left = l;
            n->right = r;
            n->dom = std::move(dom);
            n->cod = std::move(cod);
            break;
        }
        case DiagramExpr::Kind::Compose: {
            ExprPtr up = annotate(e->upper, env);
            ExprPtr lo = annotate(e->lower, env);
            if (*lo->cod != *up->dom)
                throw TypeError("cannot compose at '" + print_expr(e) + "': upper expects [" +
                                wires(*up->dom) + "] but lower produces [" + wires(*lo->cod) + "]");
            n->upper = up;
            n->lower = lo;
            n->dom = lo->dom;
            n->cod = up->cod;
            break;
        }
    }
    return n;
}

} // namespace

ExprPtr typecheck_expr(const ExprPtr& e, const Environment& env) { return annotate(e, env); }

Morphism eval_expr(const ExprPtr& e, const Environment& env) {
    if (!e->dom || !e->cod) throw TypeError("eval_expr on an untyped expression");
    switch (e->kind) {
        case DiagramExpr::Kind::Identity:
            return Morphism::identity(*e->dom);
        case DiagramExpr::Kind::Generator: {
            if (e->name == "braid") return env.braiding(e->args[0], e->args[1]).first;
            if (e->name == "braidinv") return env.braiding(e->args[0], e->args[1]).second;
            return env.generator(render_name(e->name, e->args));
        }
        case DiagramExpr::Kind::Tensor:
            return eval_expr(e->left, env).tensor(eval_expr(e->right, env));
        case DiagramExpr::Kind::Compose:
            return eval_expr(e->upper, env).compose(eval_expr(e->lower, env));
    }
    throw TypeError("corrupt expression");
}

Morphism eval_source(const std::string& source, const Environment& env) {
    return eval_expr(typecheck_expr(parse_expr(source), env), env);
}

CheckResult check_equal(const std::string& lhs, const std::string& rhs,
                        const Environment& env) {
    ExprPtr l = typecheck_expr(parse_expr(lhs), env);
    ExprPtr r = typecheck_expr(parse_expr(rhs), env);
    if (!same_dims(*l->dom, *r->dom) || !same_dims(*l->cod, *r->cod))
        throw ShapeMismatch("cannot compare [" + wires(*l->dom) + " -> " + wires(*l->cod) +
                            "] with [" + wires(*r->dom) + " -> " + wires(*r->cod) + "]");
    Morphism ml = eval_expr(l, env);
    Morphism mr = eval_expr(r, env);
    CheckResult res;
    auto diff = ml.first_difference(mr);
    if (diff) {
        res.equal = false;
        res.witness = diff;
    }
    return res;
}

} // namespace hopfdual
