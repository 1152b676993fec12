#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace aben {

// Attribute token: [A-Za-z_][A-Za-z0-9_]*, case-sensitive, and not one of the
// policy keywords (and / or / of).
bool is_valid_attribute(std::string_view s);

// Node of a monotone access tree. Either a leaf carrying an attribute or a
// k-of-n threshold gate over an ordered child list; child i (1-based) is the
// evaluation point of that child's secret share.
class AccessNode {
public:
    static AccessNode leaf(std::string attribute);
    static AccessNode gate(unsigned threshold, std::vector<AccessNode> children);

    bool is_leaf() const { return children_.empty(); }
    const std::string& attribute() const { return attribute_; }
    unsigned threshold() const { return threshold_; }
    const std::vector<AccessNode>& children() const { return children_; }

    size_t leaf_count() const;

    bool operator==(const AccessNode& rhs) const;
    bool operator!=(const AccessNode& rhs) const = default;

private:
    AccessNode() = default;

    std::string attribute_;  // leaf only
    unsigned threshold_ = 0; // gate only
    std::vector<AccessNode> children_;
};

struct AccessTree {
    AccessNode root;

    size_t leaf_count() const { return root.leaf_count(); }

    // Attributes of the leaves in leaf-position order (depth-first,
    // left to right). Positions index ciphertext/key components.
    std::vector<std::string> leaf_attributes() const;

    bool operator==(const AccessTree& rhs) const = default;
};

// Finite set of attribute strings; iteration order is lexicographic, which
// keeps key generation and serialization deterministic.
class AttributeSet {
public:
    AttributeSet() = default;
    AttributeSet(std::initializer_list<std::string> attrs);
    explicit AttributeSet(const std::vector<std::string>& attrs);

    void insert(std::string attribute);  // validates the token grammar
    bool contains(std::string_view attribute) const;
    bool empty() const { return values_.empty(); }
    size_t size() const { return values_.size(); }

    auto begin() const { return values_.begin(); }
    auto end() const { return values_.end(); }
    const std::set<std::string>& values() const { return values_; }

    bool operator==(const AttributeSet& rhs) const = default;

private:
    std::set<std::string> values_;
};

// Infix policy grammar:
//   policy := or_expr
//   or_expr := and_expr ("or" and_expr)*
//   and_expr := primary ("and" primary)*
//   primary := ATTRIBUTE | INT "of" "(" policy ("," policy)* ")" | "(" policy ")"
// `and` binds tighter than `or`; chains collapse to one n-ary gate, so
// "a and b and c" is a single 3-of-3 gate. `and` lowers to k = n, `or` to
// k = 1, "K of (...)" to k = K.
// Throws SyntaxError (with position and expected-token set) or
// ThresholdOutOfRange (K < 1 or K > n).
AccessTree parse_policy(const std::string& text);

// Canonical infix text; parse_policy(render_policy(t)) == t.
std::string render_policy(const AccessTree& tree);

// Leaf satisfied iff its attribute is present; gate satisfied iff at least
// k children are.
bool satisfies(const AccessTree& tree, const AttributeSet& attrs);

// Satisfying subtree selected for decryption: each surviving gate keeps
// exactly k satisfied children. `index` is the child's 1-based position
// under its original gate (the Lagrange evaluation point); leaves keep
// their original leaf position.
struct PrunedChild;

struct PrunedNode {
    std::string attribute;   // leaf only
    size_t leaf_position = 0;
    std::vector<PrunedChild> children;  // empty for a leaf

    bool is_leaf() const { return children.empty(); }
    size_t leaf_count() const;
};

struct PrunedChild {
    unsigned index = 0;
    PrunedNode node;
};

// Greedy per-gate choice: the k satisfied children with the fewest pruned
// leaves, ties to the lower child index. Throws NotSatisfied when the set
// fails the tree.
PrunedNode select_satisfying_subtree(const AccessTree& tree,
                                     const AttributeSet& attrs);

}  // namespace aben
