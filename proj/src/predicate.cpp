#include "sctd/predicate.hpp"

#include <cctype>

namespace sctd {

const char* to_string(Mode mode)
{
    return mode == Mode::monotone ? "monotone" : "general";
}

FactorView FactorView::of(const SusceptibilityMonotone& susc, bool u)
{
    return FactorView{lift(susc).a, lift(susc).b, u};
}

FactorView FactorView::of(const SusceptibilityGeneral& susc, bool u)
{
    return FactorView{susc.a, susc.b, u};
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
      position_(position)
{
}

struct Predicate::Node {
    enum class Kind { lit_a, lit_b, lit_u, negation, conjunction, disjunction };

    Kind kind;
    int factor = 0;  // 1..9, for lit_a / lit_b
    std::shared_ptr<const Node> lhs, rhs;
};

Predicate::Predicate(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

namespace {

using Node = Predicate::Node;

bool eval_node(const Node& n, const FactorView& cell)
{
    switch (n.kind) {
        case Node::Kind::lit_a: return cell.a[n.factor - 1];
        case Node::Kind::lit_b: return cell.b[n.factor - 1];
        case Node::Kind::lit_u: return cell.u;
        case Node::Kind::negation: return !eval_node(*n.lhs, cell);
        case Node::Kind::conjunction:
            return eval_node(*n.lhs, cell) && eval_node(*n.rhs, cell);
        case Node::Kind::disjunction:
            return eval_node(*n.lhs, cell) || eval_node(*n.rhs, cell);
    }
    return false;
}

bool any_node(const Node& n, auto&& pred)
{
    if (pred(n)) return true;
    if (n.lhs && any_node(*n.lhs, pred)) return true;
    if (n.rhs && any_node(*n.rhs, pred)) return true;
    return false;
}

void print_node(const Node& n, std::string& out)
{
    switch (n.kind) {
        case Node::Kind::lit_a: out += 'A'; out += char('0' + n.factor); return;
        case Node::Kind::lit_b: out += 'B'; out += char('0' + n.factor); return;
        case Node::Kind::lit_u: out += 'U'; return;
        case Node::Kind::negation:
            out += '!';
            out += '(';
            print_node(*n.lhs, out);
            out += ')';
            return;
        case Node::Kind::conjunction:
            out += '(';
            print_node(*n.lhs, out);
            out += " & ";
            print_node(*n.rhs, out);
            out += ')';
            return;
        case Node::Kind::disjunction:
            out += '(';
            print_node(*n.lhs, out);
            out += " | ";
            print_node(*n.rhs, out);
            out += ')';
            return;
    }
}

class Parser {
public:
    Parser(std::string_view text, Mode mode) : text_(text), mode_(mode) {}

    std::shared_ptr<const Node> run()
    {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("empty predicate", pos_);
        auto node = expr();
        skip_ws();
        if (pos_ < text_.size())
            throw ParseError(std::string("unexpected character '") + text_[pos_] + "'",
                             pos_);
        return node;
    }

private:
    std::shared_ptr<const Node> expr()
    {
        auto node = term();
        while (accept('|'))
            node = make(Node::Kind::disjunction, 0, node, term());
        return node;
    }

    std::shared_ptr<const Node> term()
    {
        auto node = factor();
        while (accept('&'))
            node = make(Node::Kind::conjunction, 0, node, factor());
        return node;
    }

    std::shared_ptr<const Node> factor()
    {
        skip_ws();
        if (accept('!')) return make(Node::Kind::negation, 0, factor(), nullptr);
        if (accept('(')) {
            auto node = expr();
            skip_ws();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return node;
        }
        return literal();
    }

    std::shared_ptr<const Node> literal()
    {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("expected literal", pos_);
        const std::size_t start = pos_;
        const char c = text_[pos_];
        if (c == 'U') {
            ++pos_;
            return make(Node::Kind::lit_u, 0, nullptr, nullptr);
        }
        if (c == 'A' || c == 'B') {
            if (pos_ + 1 >= text_.size() || !std::isdigit((unsigned char)text_[pos_ + 1]))
                throw ParseError(std::string("expected digit after '") + c + "'",
                                 pos_ + 1);
            const int k = text_[pos_ + 1] - '0';
            pos_ += 2;
            const bool monotone_ok = k == 1 || k == 2 || k == 4 || k == 6;
            if (k < 1 || k > 9 || (mode_ == Mode::monotone && !monotone_ok))
                throw ParseError("unknown literal '" + std::string(text_.substr(start, 2)) +
                                     "' in " + std::string(to_string(mode_)) + " mode",
                                 start);
            return make(c == 'A' ? Node::Kind::lit_a : Node::Kind::lit_b, k, nullptr,
                        nullptr);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    static std::shared_ptr<const Node> make(Node::Kind kind, int factor,
                                            std::shared_ptr<const Node> lhs,
                                            std::shared_ptr<const Node> rhs)
    {
        auto node = std::make_shared<Node>();
        node->kind = kind;
        node->factor = factor;
        node->lhs = std::move(lhs);
        node->rhs = std::move(rhs);
        return node;
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) ++pos_;
    }

    std::string_view text_;
    Mode mode_;
    std::size_t pos_ = 0;
};

std::shared_ptr<const Node> wrap2(Node::Kind kind, int factor,
                                  std::shared_ptr<const Node> lhs,
                                  std::shared_ptr<const Node> rhs)
{
    auto node = std::make_shared<Node>();
    node->kind = kind;
    node->factor = factor;
    node->lhs = std::move(lhs);
    node->rhs = std::move(rhs);
    return node;
}

}  // namespace

Predicate Predicate::parse(std::string_view text, Mode mode)
{
    return Predicate(Parser(text, mode).run());
}

bool Predicate::eval(const FactorView& cell) const
{
    return eval_node(*root_, cell);
}

bool Predicate::eval(const SusceptibilityMonotone& susc, bool u) const
{
    return eval(FactorView::of(susc, u));
}

bool Predicate::uses_u() const
{
    return any_node(*root_, [](const Node& n) { return n.kind == Node::Kind::lit_u; });
}

bool Predicate::uses_general_literals() const
{
    return any_node(*root_, [](const Node& n) {
        return (n.kind == Node::Kind::lit_a || n.kind == Node::Kind::lit_b) &&
               n.factor != 1 && n.factor != 2 && n.factor != 4 && n.factor != 6;
    });
}

std::string Predicate::str() const
{
    std::string out;
    print_node(*root_, out);
    return out;
}

Predicate Predicate::literal_a(int k)
{
    if (k < 1 || k > 9) throw std::domain_error("factor index out of range");
    return Predicate(wrap2(Node::Kind::lit_a, k, nullptr, nullptr));
}

Predicate Predicate::literal_b(int k)
{
    if (k < 1 || k > 9) throw std::domain_error("factor index out of range");
    return Predicate(wrap2(Node::Kind::lit_b, k, nullptr, nullptr));
}

Predicate Predicate::literal_u()
{
    return Predicate(wrap2(Node::Kind::lit_u, 0, nullptr, nullptr));
}

Predicate Predicate::negation(Predicate operand)
{
    return Predicate(wrap2(Node::Kind::negation, 0, std::move(operand.root_), nullptr));
}

Predicate Predicate::conjunction(Predicate lhs, Predicate rhs)
{
    return Predicate(
        wrap2(Node::Kind::conjunction, 0, std::move(lhs.root_), std::move(rhs.root_)));
}

Predicate Predicate::disjunction(Predicate lhs, Predicate rhs)
{
    return Predicate(
        wrap2(Node::Kind::disjunction, 0, std::move(lhs.root_), std::move(rhs.root_)));
}

std::vector<int> count_types(const Predicate& p)
{
    if (p.uses_u())
        throw std::invalid_argument("count_types requires a U-free predicate");
    if (p.uses_general_literals())
        throw std::invalid_argument("count_types operates on the monotone model");
    std::vector<int> matched;
    for (int t = 1; t <= kTypeCount; ++t) {
        const auto susc = susceptibility_from_index(t);
        // U-free, so the u argument is immaterial.
        if (p.eval(susc, false)) matched.push_back(t);
    }
    return matched;
}

}  // namespace sctd
