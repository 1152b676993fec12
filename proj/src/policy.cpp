#include "aben/policy.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "aben/errors.hpp"

namespace aben {

namespace {

bool ident_start(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

bool is_keyword(std::string_view s) {
    return s == "and" || s == "or" || s == "of";
}

}  // namespace

bool is_valid_attribute(std::string_view s) {
    if (s.empty() || !ident_start(s[0])) return false;
    for (char c : s.substr(1))
        if (!ident_char(c)) return false;
    return !is_keyword(s);
}

// ---- tree nodes ----

AccessNode AccessNode::leaf(std::string attribute) {
    if (!is_valid_attribute(attribute))
        throw SyntaxError(0, {"attribute"},
                          "invalid attribute \"" + attribute + "\"");
    AccessNode n;
    n.attribute_ = std::move(attribute);
    return n;
}

AccessNode AccessNode::gate(unsigned threshold, std::vector<AccessNode> children) {
    if (children.empty() || threshold < 1 || threshold > children.size())
        throw ThresholdOutOfRange(
            "threshold " + std::to_string(threshold) + " outside 1.." +
            std::to_string(children.size()));
    AccessNode n;
    n.threshold_ = threshold;
    n.children_ = std::move(children);
    return n;
}

size_t AccessNode::leaf_count() const {
    if (is_leaf()) return 1;
    size_t total = 0;
    for (const AccessNode& c : children_) total += c.leaf_count();
    return total;
}

bool AccessNode::operator==(const AccessNode& rhs) const {
    return attribute_ == rhs.attribute_ && threshold_ == rhs.threshold_ &&
           children_ == rhs.children_;
}

namespace {

void collect_leaves(const AccessNode& n, std::vector<std::string>& out) {
    if (n.is_leaf()) {
        out.push_back(n.attribute());
        return;
    }
    for (const AccessNode& c : n.children()) collect_leaves(c, out);
}

}  // namespace

std::vector<std::string> AccessTree::leaf_attributes() const {
    std::vector<std::string> out;
    collect_leaves(root, out);
    return out;
}

// ---- attribute sets ----

AttributeSet::AttributeSet(std::initializer_list<std::string> attrs) {
    for (const std::string& a : attrs) insert(a);
}

AttributeSet::AttributeSet(const std::vector<std::string>& attrs) {
    for (const std::string& a : attrs) insert(a);
}

void AttributeSet::insert(std::string attribute) {
    if (!is_valid_attribute(attribute))
        throw SyntaxError(0, {"attribute"},
                          "invalid attribute \"" + attribute + "\"");
    values_.insert(std::move(attribute));
}

bool AttributeSet::contains(std::string_view attribute) const {
    return values_.find(std::string(attribute)) != values_.end();
}

// ---- parser ----

namespace {

enum class Tok { ident, number, lparen, rparen, comma, kw_and, kw_or, kw_of, end };

struct Token {
    Tok kind;
    std::string text;
    size_t pos;
};

const char* tok_name(Tok t) {
    switch (t) {
        case Tok::ident: return "attribute";
        case Tok::number: return "integer";
        case Tok::lparen: return "'('";
        case Tok::rparen: return "')'";
        case Tok::comma: return "','";
        case Tok::kw_and: return "'and'";
        case Tok::kw_or: return "'or'";
        case Tok::kw_of: return "'of'";
        case Tok::end: return "end of input";
    }
    return "?";
}

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) { advance(); }

    AccessTree parse() {
        AccessNode root = parse_or();
        expect(Tok::end);
        return AccessTree{std::move(root)};
    }

private:
    const std::string& text_;
    size_t cursor_ = 0;
    Token cur_{};

    void advance() {
        while (cursor_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[cursor_])))
            ++cursor_;
        size_t start = cursor_;
        if (cursor_ >= text_.size()) {
            cur_ = {Tok::end, "", start};
            return;
        }
        char c = text_[cursor_];
        if (c == '(') { cur_ = {Tok::lparen, "(", start}; ++cursor_; return; }
        if (c == ')') { cur_ = {Tok::rparen, ")", start}; ++cursor_; return; }
        if (c == ',') { cur_ = {Tok::comma, ",", start}; ++cursor_; return; }
        if (c >= '0' && c <= '9') {
            while (cursor_ < text_.size() && text_[cursor_] >= '0' &&
                   text_[cursor_] <= '9')
                ++cursor_;
            cur_ = {Tok::number, text_.substr(start, cursor_ - start), start};
            return;
        }
        if (ident_start(c)) {
            while (cursor_ < text_.size() && ident_char(text_[cursor_]))
                ++cursor_;
            std::string word = text_.substr(start, cursor_ - start);
            Tok kind = word == "and"  ? Tok::kw_and
                       : word == "or" ? Tok::kw_or
                       : word == "of" ? Tok::kw_of
                                      : Tok::ident;
            cur_ = {kind, std::move(word), start};
            return;
        }
        throw SyntaxError(start, {}, std::string("unexpected character '") + c + "'");
    }

    Token expect(Tok kind) {
        if (cur_.kind != kind)
            throw SyntaxError(cur_.pos, {tok_name(kind)},
                              "got " + describe(cur_));
        Token t = cur_;
        if (kind != Tok::end) advance();
        return t;
    }

    static std::string describe(const Token& t) {
        if (t.kind == Tok::end) return "end of input";
        return "\"" + t.text + "\"";
    }

    AccessNode parse_or() {
        std::vector<AccessNode> terms;
        terms.push_back(parse_and());
        while (cur_.kind == Tok::kw_or) {
            advance();
            terms.push_back(parse_and());
        }
        if (terms.size() == 1) return std::move(terms.front());
        return AccessNode::gate(1, std::move(terms));
    }

    AccessNode parse_and() {
        std::vector<AccessNode> terms;
        terms.push_back(parse_primary());
        while (cur_.kind == Tok::kw_and) {
            advance();
            terms.push_back(parse_primary());
        }
        if (terms.size() == 1) return std::move(terms.front());
        unsigned n = static_cast<unsigned>(terms.size());
        return AccessNode::gate(n, std::move(terms));
    }

    AccessNode parse_primary() {
        switch (cur_.kind) {
            case Tok::ident: {
                Token t = cur_;
                advance();
                return AccessNode::leaf(t.text);
            }
            case Tok::number: {
                Token t = cur_;
                advance();
                if (t.text.size() > 9)
                    throw ThresholdOutOfRange("threshold " + t.text +
                                              " is out of range");
                unsigned k = static_cast<unsigned>(std::stoul(t.text));
                expect(Tok::kw_of);
                expect(Tok::lparen);
                std::vector<AccessNode> children;
                children.push_back(parse_or());
                while (cur_.kind == Tok::comma) {
                    advance();
                    children.push_back(parse_or());
                }
                expect(Tok::rparen);
                if (k < 1 || k > children.size())
                    throw ThresholdOutOfRange(
                        "threshold " + std::to_string(k) + " outside 1.." +
                        std::to_string(children.size()) + " at position " +
                        std::to_string(t.pos));
                return AccessNode::gate(k, std::move(children));
            }
            case Tok::lparen: {
                advance();
                AccessNode inner = parse_or();
                expect(Tok::rparen);
                return inner;
            }
            default:
                throw SyntaxError(cur_.pos, {"attribute", "integer", "'('"},
                                  "got " + describe(cur_));
        }
    }
};

}  // namespace

AccessTree parse_policy(const std::string& text) { return Parser(text).parse(); }

// ---- rendering ----

namespace {

void render_node(const AccessNode& n, std::string& out);

// Infix chain child: gates get parentheses so nesting survives re-parsing.
void render_chain_child(const AccessNode& n, std::string& out) {
    if (n.is_leaf()) {
        out += n.attribute();
    } else {
        out += '(';
        render_node(n, out);
        out += ')';
    }
}

void render_node(const AccessNode& n, std::string& out) {
    if (n.is_leaf()) {
        out += n.attribute();
        return;
    }
    const auto& ch = n.children();
    unsigned k = n.threshold();
    if (ch.size() >= 2 && (k == ch.size() || k == 1)) {
        const char* sep = k == 1 ? " or " : " and ";
        for (size_t i = 0; i < ch.size(); ++i) {
            if (i) out += sep;
            render_chain_child(ch[i], out);
        }
        return;
    }
    out += std::to_string(k);
    out += " of (";
    for (size_t i = 0; i < ch.size(); ++i) {
        if (i) out += ", ";
        render_node(ch[i], out);
    }
    out += ')';
}

}  // namespace

std::string render_policy(const AccessTree& tree) {
    std::string out;
    render_node(tree.root, out);
    return out;
}

// ---- evaluation ----

namespace {

bool node_satisfies(const AccessNode& n, const AttributeSet& attrs) {
    if (n.is_leaf()) return attrs.contains(n.attribute());
    unsigned hit = 0;
    for (const AccessNode& c : n.children())
        if (node_satisfies(c, attrs)) ++hit;
    return hit >= n.threshold();
}

}  // namespace

bool satisfies(const AccessTree& tree, const AttributeSet& attrs) {
    return node_satisfies(tree.root, attrs);
}

// ---- pruning ----

size_t PrunedNode::leaf_count() const {
    if (is_leaf()) return 1;
    size_t total = 0;
    for (const PrunedChild& c : children) total += c.node.leaf_count();
    return total;
}

namespace {

// Walks the whole tree so leaf numbering matches the unpruned traversal,
// returning the pruned subtree when this node is satisfied.
std::optional<PrunedNode> prune_node(const AccessNode& n,
                                     const AttributeSet& attrs,
                                     size_t& next_leaf) {
    if (n.is_leaf()) {
        size_t pos = next_leaf++;
        if (!attrs.contains(n.attribute())) return std::nullopt;
        PrunedNode out;
        out.attribute = n.attribute();
        out.leaf_position = pos;
        return out;
    }

    struct Candidate {
        unsigned index;
        PrunedNode node;
        size_t leaves;
    };
    std::vector<Candidate> sat;
    unsigned index = 0;
    for (const AccessNode& c : n.children()) {
        ++index;
        auto sub = prune_node(c, attrs, next_leaf);
        if (sub) {
            size_t leaves = sub->leaf_count();
            sat.push_back({index, std::move(*sub), leaves});
        }
    }
    if (sat.size() < n.threshold()) return std::nullopt;

    // Keep the k cheapest children; ties go to the lower index. Sorting by
    // (leaves, index) is stable enough to make the choice deterministic.
    std::sort(sat.begin(), sat.end(), [](const Candidate& a, const Candidate& b) {
        return a.leaves != b.leaves ? a.leaves < b.leaves : a.index < b.index;
    });
    sat.resize(n.threshold());
    std::sort(sat.begin(), sat.end(),
              [](const Candidate& a, const Candidate& b) { return a.index < b.index; });

    PrunedNode out;
    for (Candidate& c : sat)
        out.children.push_back(PrunedChild{c.index, std::move(c.node)});
    return out;
}

}  // namespace

PrunedNode select_satisfying_subtree(const AccessTree& tree,
                                     const AttributeSet& attrs) {
    size_t next_leaf = 0;
    auto out = prune_node(tree.root, attrs, next_leaf);
    if (!out) throw NotSatisfied("attribute set does not satisfy the policy");
    return std::move(*out);
}

}  // namespace aben
