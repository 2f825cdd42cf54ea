#include "kahler/parser.hpp"

#include <cctype>

#include "kahler/errors.hpp"

namespace kahler {

namespace {

struct Token {
    enum class Type { Integer, Ident, Op, End };
    Type type;
    std::string text;
    mpz_class value;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_])))
            ++i_;
        tok_.pos = i_;
        if (i_ >= src_.size()) {
            tok_.type = Token::Type::End;
            tok_.text.clear();
            return;
        }
        char c = src_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < src_.size() &&
                   std::isdigit(static_cast<unsigned char>(src_[j])))
                ++j;
            tok_.type = Token::Type::Integer;
            tok_.text = src_.substr(i_, j - i_);
            tok_.value = mpz_class(tok_.text);
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[j])) ||
                    src_[j] == '_'))
                ++j;
            tok_.type = Token::Type::Ident;
            tok_.text = src_.substr(i_, j - i_);
            i_ = j;
            return;
        }
        if (std::string("+-*/^(){},").find(c) != std::string::npos) {
            tok_.type = Token::Type::Op;
            tok_.text = std::string(1, c);
            ++i_;
            return;
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", i_);
    }

    const std::string& src_;
    std::size_t i_ = 0;
    Token tok_;
};

class Parser {
public:
    Parser(const std::string& src, const TowerPtr& tower)
        : lex_(src), tower_(tower) {}

    AstPtr parse() {
        AstPtr e = expr();
        if (lex_.peek().type != Token::Type::End)
            throw SyntaxError("trailing input", lex_.peek().pos);
        return e;
    }

private:
    bool at_op(const char* s) const {
        return lex_.peek().type == Token::Type::Op && lex_.peek().text == s;
    }
    Token expect_op(const char* s) {
        if (!at_op(s))
            throw SyntaxError(std::string("expected '") + s + "'",
                              lex_.peek().pos);
        return lex_.take();
    }

    AstPtr expr() {
        AstPtr l = term();
        while (at_op("+") || at_op("-")) {
            Token t = lex_.take();
            AstPtr n = std::make_unique<AstNode>();
            n->type = AstNode::Type::Binary;
            n->op = t.text[0];
            n->pos = t.pos;
            n->lhs = std::move(l);
            n->rhs = term();
            l = std::move(n);
        }
        return l;
    }

    AstPtr term() {
        AstPtr l = factor();
        while (at_op("*") || at_op("/")) {
            Token t = lex_.take();
            AstPtr n = std::make_unique<AstNode>();
            n->type = AstNode::Type::Binary;
            n->op = t.text[0];
            n->pos = t.pos;
            n->lhs = std::move(l);
            n->rhs = factor();
            l = std::move(n);
        }
        return l;
    }

    AstPtr factor() {
        if (at_op("-")) {
            Token t = lex_.take();
            AstPtr n = std::make_unique<AstNode>();
            n->type = AstNode::Type::Unary;
            n->op = '-';
            n->pos = t.pos;
            n->lhs = factor();
            return n;
        }
        return power();
    }

    AstPtr power() {
        AstPtr base = atom();
        if (at_op("^")) {
            Token t = lex_.take();
            bool neg = false;
            if (at_op("-")) {
                lex_.take();
                neg = true;
            }
            if (lex_.peek().type != Token::Type::Integer)
                throw SyntaxError("exponent must be an integer literal",
                                  lex_.peek().pos);
            Token e = lex_.take();
            AstPtr n = std::make_unique<AstNode>();
            n->type = AstNode::Type::Binary;
            n->op = '^';
            n->pos = t.pos;
            n->lhs = std::move(base);
            n->rhs = std::make_unique<AstNode>();
            n->rhs->type = AstNode::Type::Integer;
            n->rhs->pos = e.pos;
            n->rhs->value = neg ? mpz_class(-e.value) : e.value;
            return n;
        }
        return base;
    }

    AstPtr atom() {
        const Token& t = lex_.peek();
        if (t.type == Token::Type::Integer) {
            Token tok = lex_.take();
            AstPtr n = std::make_unique<AstNode>();
            n->type = AstNode::Type::Integer;
            n->pos = tok.pos;
            n->value = tok.value;
            return n;
        }
        if (t.type == Token::Type::Ident) {
            Token tok = lex_.take();
            if (tok.text == "d" && at_op("(")) {
                lex_.take();
                AstPtr n = std::make_unique<AstNode>();
                n->type = AstNode::Type::Diff;
                n->pos = tok.pos;
                n->lhs = expr();
                expect_op(")");
                return n;
            }
            if (tok.text != "eps" && !known_symbol(tok.text))
                throw UnknownSymbol(tok.text, tok.pos);
            AstPtr n = std::make_unique<AstNode>();
            n->type = AstNode::Type::Symbol;
            n->pos = tok.pos;
            n->name = tok.text;
            return n;
        }
        if (at_op("(")) {
            lex_.take();
            AstPtr e = expr();
            expect_op(")");
            return e;
        }
        if (at_op("{")) {
            Token tok = lex_.take();
            AstPtr n = std::make_unique<AstNode>();
            n->type = AstNode::Type::Pair;
            n->pos = tok.pos;
            n->lhs = expr();
            expect_op(",");
            n->rhs = expr();
            expect_op("}");
            return n;
        }
        throw SyntaxError("expected expression", t.pos);
    }

    bool known_symbol(const std::string& name) const {
        if (!tower_) return name == "x";
        if (name == tower_->var_name()) return true;
        if (tower_->has_alg() && name == tower_->alg().name) return true;
        return tower_->trans_index(name).has_value();
    }

    Lexer lex_;
    TowerPtr tower_;
};

Value make_element(FieldElem f) {
    Value v;
    v.kind = Value::Kind::Dual;
    v.a = std::move(f);
    return v;
}

Value eval_node(const AstNode& n, const TowerPtr& tower);

Value eval_binary(const AstNode& n, const TowerPtr& tower) {
    using K = Value::Kind;
    if (n.op == '^') {
        Value base = eval_node(*n.lhs, tower);
        if (base.kind != K::Dual)
            throw TypeMismatch("only elements can be raised to a power");
        long e = n.rhs->value.get_si();
        if (base.a.is_zero() && !base.b.is_zero() && (e >= 2 || e <= -2))
            throw EpsSquared();
        bool neg = e < 0;
        if (neg) e = -e;
        Value r = make_element(FieldElem(1));
        for (long i = 0; i < e; ++i) {
            r.b = r.a * base.b + r.b * base.a;
            r.a = r.a * base.a;
        }
        if (neg) {
            if (r.a.is_zero()) {
                if (r.b.is_zero()) throw DivisionByZero();
                throw NonUnit();
            }
            FieldElem ia = r.a.inv();
            r.b = -r.b * ia * ia;
            r.a = ia;
        }
        return r;
    }
    Value l = eval_node(*n.lhs, tower);
    Value r = eval_node(*n.rhs, tower);
    if (l.kind == K::Symbol || r.kind == K::Symbol)
        throw TypeMismatch("no arithmetic on symbols");
    switch (n.op) {
        case '+':
        case '-': {
            if (l.kind != r.kind)
                throw TypeMismatch("cannot add a form to an element");
            Value v;
            if (l.kind == K::Form) {
                v.kind = K::Form;
                v.form = n.op == '+' ? l.form + r.form : l.form - r.form;
            } else {
                v.a = n.op == '+' ? l.a + r.a : l.a - r.a;
                v.b = n.op == '+' ? l.b + r.b : l.b - r.b;
            }
            return v;
        }
        case '*': {
            if (l.kind == K::Form && r.kind == K::Form)
                throw TypeMismatch("cannot multiply two forms");
            if (l.kind == K::Form || r.kind == K::Form) {
                const Value& form = l.kind == K::Form ? l : r;
                const Value& elem = l.kind == K::Form ? r : l;
                if (!elem.is_element())
                    throw TypeMismatch("forms scale by elements only");
                Value v;
                v.kind = K::Form;
                v.form = elem.a * form.form;
                return v;
            }
            if (l.a.is_zero() && r.a.is_zero() && !l.b.is_zero() &&
                !r.b.is_zero())
                throw EpsSquared();
            Value v;
            v.a = l.a * r.a;
            v.b = l.a * r.b + l.b * r.a;
            return v;
        }
        case '/': {
            if (r.kind == K::Form) throw TypeMismatch("cannot divide by a form");
            if (r.a.is_zero()) {
                if (r.b.is_zero()) throw DivisionByZero();
                throw NonUnit();
            }
            FieldElem ia = r.a.inv();
            if (l.kind == K::Form) {
                if (!r.b.is_zero())
                    throw TypeMismatch("forms scale by elements only");
                Value v;
                v.kind = K::Form;
                v.form = ia * l.form;
                return v;
            }
            // (a1 + eps b1)(a2 + eps b2)^-1
            Value v;
            v.a = l.a * ia;
            v.b = (l.b * r.a - l.a * r.b) * ia * ia;
            return v;
        }
        default:
            throw SyntaxError("unknown operator", n.pos);
    }
}

Value eval_node(const AstNode& n, const TowerPtr& tower) {
    using K = Value::Kind;
    switch (n.type) {
        case AstNode::Type::Integer:
            return make_element(FieldElem(Scalar(mpq_class(n.value))));
        case AstNode::Type::Symbol: {
            if (n.name == "eps") {
                Value v;
                v.b = FieldElem(1);
                return v;
            }
            if (!tower || n.name == (tower ? tower->var_name() : "x"))
                return make_element(FieldElem(tower, XPoly::x(1)));
            if (tower->has_alg() && n.name == tower->alg().name)
                return make_element(FieldElem(tower->alpha()));
            if (auto i = tower->trans_index(n.name))
                return make_element(
                    FieldElem(Scalar(tower, {RatFun::variable(*i)})));
            throw UnknownSymbol(n.name, n.pos);
        }
        case AstNode::Type::Unary: {
            Value v = eval_node(*n.lhs, tower);
            if (v.kind == K::Symbol) throw TypeMismatch("cannot negate a symbol");
            if (v.kind == K::Form) {
                v.form = -v.form;
            } else {
                v.a = -v.a;
                v.b = -v.b;
            }
            return v;
        }
        case AstNode::Type::Binary:
            return eval_binary(n, tower);
        case AstNode::Type::Diff: {
            Value operand = eval_node(*n.lhs, tower);
            if (!operand.is_element())
                throw TypeMismatch("d(.) applies to scalar expressions");
            Value v;
            v.kind = K::Form;
            v.form = d_abs(operand.a, tower);
            return v;
        }
        case AstNode::Type::Pair: {
            Value l = eval_node(*n.lhs, tower);
            Value r = eval_node(*n.rhs, tower);
            if (l.kind != K::Dual || r.kind != K::Dual)
                throw TypeMismatch("symbol slots must be elements of K[eps]");
            Value v;
            v.kind = K::Symbol;
            v.symbol = DualSymbol(DualUnit(l.a, l.b), DualUnit(r.a, r.b));
            return v;
        }
    }
    throw Error("unreachable");
}

}  // namespace

AstPtr parse_expression(const std::string& src, const TowerPtr& tower) {
    return Parser(src, tower).parse();
}

Value eval_ast(const AstNode& ast, const TowerPtr& tower) {
    return eval_node(ast, tower);
}

Value eval_expression(const std::string& src, const TowerPtr& tower) {
    return eval_ast(*parse_expression(src, tower), tower);
}

}  // namespace kahler
