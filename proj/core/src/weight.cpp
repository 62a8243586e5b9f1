#include "extremal/weight.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <utility>

#include "extremal/errors.hpp"

namespace extremal {

struct Weight::Node {
    enum class Kind { Number, Coord, Neg, Add, Sub, Mul, Div, Re, Im, Abs, Log, Max, Min };

    Kind kind = Kind::Number;
    double number = 0.0;
    int coord = 0;  // 0-based coordinate index
    std::shared_ptr<const Node> a, b;
    bool is_real = true;
    bool has_coord = false;
};

namespace {

using Node = Weight::Node;
using NodePtr = std::shared_ptr<const Node>;

Complex eval_node(const Node& n, const AffinePoint& z) {
    using K = Node::Kind;
    switch (n.kind) {
        case K::Number: return Complex(n.number, 0.0);
        case K::Coord:
            if (n.coord >= static_cast<int>(z.size()))
                throw ConstraintViolation("weight references a coordinate beyond the point dimension");
            return z[n.coord];
        case K::Neg: return -eval_node(*n.a, z);
        case K::Add: return eval_node(*n.a, z) + eval_node(*n.b, z);
        case K::Sub: return eval_node(*n.a, z) - eval_node(*n.b, z);
        case K::Mul: return eval_node(*n.a, z) * eval_node(*n.b, z);
        case K::Div: return eval_node(*n.a, z) / eval_node(*n.b, z);
        case K::Re: return Complex(eval_node(*n.a, z).real(), 0.0);
        case K::Im: return Complex(eval_node(*n.a, z).imag(), 0.0);
        case K::Abs: return Complex(std::abs(eval_node(*n.a, z)), 0.0);
        case K::Log: return Complex(std::log(eval_node(*n.a, z).real()), 0.0);
        case K::Max:
            return Complex(std::max(eval_node(*n.a, z).real(), eval_node(*n.b, z).real()), 0.0);
        case K::Min:
            return Complex(std::min(eval_node(*n.a, z).real(), eval_node(*n.b, z).real()), 0.0);
    }
    return Complex(0.0, 0.0);
}

NodePtr make_number(double v) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Number;
    n->number = v;
    return n;
}

// Subtrees without coordinate references evaluate to the same real number
// everywhere; fold them, but only when the value is an ordinary finite one
// (log 0 and friends keep their runtime clipping behaviour).
NodePtr fold(NodePtr n) {
    if (n->kind == Node::Kind::Number || n->has_coord) return n;
    const double v = eval_node(*n, {}).real();
    if (!std::isfinite(v) || v < kWeightFloor) return n;
    return make_number(v);
}

class Parser {
public:
    explicit Parser(const std::string& src) : src_(src) {}

    NodePtr parse() {
        NodePtr e = expression();
        skip_space();
        if (pos_ != src_.size())
            throw ParseError("unexpected trailing input", pos_, {"end of input", "+", "-", "*", "/"});
        if (!e->is_real)
            throw ParseError("weight must be real-valued; wrap complex terms in re/im/abs", 0,
                             {"re(", "im(", "abs("});
        return e;
    }

private:
    NodePtr expression() {
        NodePtr left = term();
        for (;;) {
            skip_space();
            if (accept('+')) left = binary(Node::Kind::Add, left, term());
            else if (accept('-')) left = binary(Node::Kind::Sub, left, term());
            else return left;
        }
    }

    NodePtr term() {
        NodePtr left = factor();
        for (;;) {
            skip_space();
            if (accept('*')) left = binary(Node::Kind::Mul, left, factor());
            else if (accept('/')) left = binary(Node::Kind::Div, left, factor());
            else return left;
        }
    }

    NodePtr factor() {
        skip_space();
        if (pos_ >= src_.size())
            throw ParseError("unexpected end of input", pos_, factor_expected());
        const char c = src_[pos_];
        if (accept('-')) {
            auto n = std::make_shared<Node>();
            n->kind = Node::Kind::Neg;
            n->a = factor();
            n->is_real = n->a->is_real;
            n->has_coord = n->a->has_coord;
            return fold(n);
        }
        if (accept('(')) {
            NodePtr e = expression();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
        throw ParseError("unexpected character", pos_, factor_expected());
    }

    NodePtr number() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ < src_.size() && src_[pos_] == '.') {
            ++pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        }
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t mark = pos_++;
            if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
            if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    ++pos_;
            } else {
                pos_ = mark;  // 'e' was not an exponent
            }
        }
        return make_number(std::stod(src_.substr(start, pos_ - start)));
    }

    NodePtr identifier() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        const std::string name = src_.substr(start, pos_ - start);

        if (name.size() >= 2 && name[0] == 'z') {
            bool digits = true;
            for (std::size_t i = 1; i < name.size(); ++i)
                digits = digits && std::isdigit(static_cast<unsigned char>(name[i]));
            if (digits) {
                const int k = std::stoi(name.substr(1));
                if (k < 1) throw ParseError("coordinates are numbered from z1", start, {"z1", "z2"});
                auto n = std::make_shared<Node>();
                n->kind = Node::Kind::Coord;
                n->coord = k - 1;
                n->is_real = false;
                n->has_coord = true;
                return n;
            }
        }

        if (name == "re" || name == "im" || name == "abs" || name == "log") {
            expect('(');
            NodePtr arg = expression();
            expect(')');
            auto n = std::make_shared<Node>();
            n->kind = name == "re"    ? Node::Kind::Re
                      : name == "im"  ? Node::Kind::Im
                      : name == "abs" ? Node::Kind::Abs
                                      : Node::Kind::Log;
            if (n->kind == Node::Kind::Log && !arg->is_real)
                throw ParseError("log takes a real argument", start, {"re(", "im(", "abs("});
            n->a = arg;
            n->is_real = true;
            n->has_coord = arg->has_coord;
            return fold(n);
        }
        if (name == "max" || name == "min") {
            expect('(');
            NodePtr a = expression();
            expect(',');
            NodePtr b = expression();
            expect(')');
            if (!a->is_real || !b->is_real)
                throw ParseError(name + " takes real arguments", start, {"re(", "im(", "abs("});
            auto n = std::make_shared<Node>();
            n->kind = name == "max" ? Node::Kind::Max : Node::Kind::Min;
            n->a = a;
            n->b = b;
            n->has_coord = a->has_coord || b->has_coord;
            return fold(n);
        }
        throw ParseError("unknown identifier '" + name + "'", start,
                         {"zK", "re", "im", "abs", "log", "max", "min"});
    }

    NodePtr binary(Node::Kind kind, NodePtr a, NodePtr b) {
        auto n = std::make_shared<Node>();
        n->kind = kind;
        n->a = std::move(a);
        n->b = std::move(b);
        n->is_real = n->a->is_real && n->b->is_real;
        n->has_coord = n->a->has_coord || n->b->has_coord;
        return fold(n);
    }

    static std::vector<std::string> factor_expected() {
        return {"number", "zK", "re(", "im(", "abs(", "log(", "max(", "min(", "(", "-"};
    }

    void skip_space() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c))
            throw ParseError(std::string("expected '") + c + "'", pos_, {std::string(1, c)});
    }

    const std::string& src_;
    std::size_t pos_ = 0;
};

void print_node(const Node& n, std::string& out) {
    using K = Node::Kind;
    char buf[40];
    switch (n.kind) {
        case K::Number:
            std::snprintf(buf, sizeof(buf), "%.17g", n.number);
            out += buf;
            return;
        case K::Coord:
            out += 'z';
            out += std::to_string(n.coord + 1);
            return;
        case K::Neg:
            out += '-';
            print_node(*n.a, out);
            return;
        case K::Add: case K::Sub: case K::Mul: case K::Div: {
            out += '(';
            print_node(*n.a, out);
            out += n.kind == K::Add ? " + " : n.kind == K::Sub ? " - "
                   : n.kind == K::Mul ? " * " : " / ";
            print_node(*n.b, out);
            out += ')';
            return;
        }
        case K::Re: case K::Im: case K::Abs: case K::Log: {
            out += n.kind == K::Re ? "re(" : n.kind == K::Im ? "im("
                   : n.kind == K::Abs ? "abs(" : "log(";
            print_node(*n.a, out);
            out += ')';
            return;
        }
        case K::Max: case K::Min: {
            out += n.kind == K::Max ? "max(" : "min(";
            print_node(*n.a, out);
            out += ", ";
            print_node(*n.b, out);
            out += ')';
            return;
        }
    }
}

bool nodes_equal(const Node& a, const Node& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Node::Kind::Number: return a.number == b.number;
        case Node::Kind::Coord: return a.coord == b.coord;
        default: break;
    }
    if (static_cast<bool>(a.a) != static_cast<bool>(b.a)) return false;
    if (static_cast<bool>(a.b) != static_cast<bool>(b.b)) return false;
    if (a.a && !nodes_equal(*a.a, *b.a)) return false;
    if (a.b && !nodes_equal(*a.b, *b.b)) return false;
    return true;
}

int max_coord_of(const Node& n) {
    int m = n.kind == Node::Kind::Coord ? n.coord + 1 : 0;
    if (n.a) m = std::max(m, max_coord_of(*n.a));
    if (n.b) m = std::max(m, max_coord_of(*n.b));
    return m;
}

}  // namespace

Weight Weight::parse(const std::string& source) {
    return Weight(Parser(source).parse());
}

Weight Weight::zero() { return constant(0.0); }

Weight Weight::constant(double c) { return Weight(make_number(c)); }

Weight::Value Weight::operator()(const AffinePoint& z) const {
    const double v = eval_node(*root_, z).real();
    if (!(v >= kWeightFloor)) return {kWeightFloor, true};  // -inf, NaN, below floor
    return {v, false};
}

bool Weight::is_constant() const { return !root_->has_coord; }

Weight::Value Weight::constant_value() const { return (*this)(AffinePoint{}); }

int Weight::max_coordinate() const { return max_coord_of(*root_); }

std::string Weight::to_string() const {
    std::string out;
    print_node(*root_, out);
    return out;
}

bool Weight::operator==(const Weight& other) const {
    return nodes_equal(*root_, *other.root_);
}

}  // namespace extremal
