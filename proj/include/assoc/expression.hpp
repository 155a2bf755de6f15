#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace assoc::multiplihedron {

/// Domain factor: an atom a_i, or a bracketed word of at least two factors.
struct Factor {
  int atom = 0;
  std::vector<Factor> parts;

  static Factor letter(int i) { return {i, {}}; }
  static Factor bracket(std::vector<Factor> parts);
  bool is_atom() const { return atom > 0; }
  int first() const { return is_atom() ? atom : parts.front().first(); }
  int last() const { return is_atom() ? atom : parts.back().last(); }
  bool operator==(const Factor&) const = default;
};

/// f applied to an argument.  A dotted argument has at least two segments,
/// each a single factor.  A dot-free argument is a word of factors: either
/// one atom or at least two factors.
struct Block {
  bool dotted = false;
  std::vector<Factor> items;

  /// Dot-free block; a single bracketed factor loses its brackets.
  static Block word(std::vector<Factor> items);
  static Block dots(std::vector<Factor> segments);
  int first() const { return items.front().first(); }
  int last() const { return items.back().last(); }
  bool operator==(const Block&) const = default;
};

/// Codomain term: one block, or a bracketed product of at least two terms.
struct Term {
  bool is_block = true;
  Block block;
  std::vector<Term> parts;

  static Term of(Block b) { return {true, std::move(b), {}}; }
  static Term product(std::vector<Term> parts);
  bool operator==(const Term&) const = default;
};

/// A term whose outermost product is written without brackets.
struct Expression {
  Term root;
  bool operator==(const Expression&) const = default;
};

/// A sequence of blocks with no codomain brackets.
struct FlatExpression {
  std::vector<Block> blocks;
  bool operator==(const FlatExpression&) const = default;
};

std::string to_string(const Factor& f);
std::string to_string(const Block& b);
std::string to_string(const Term& t);
std::string to_string(const Expression& e);
std::string to_string(const FlatExpression& e);

/// Accepts "." or the middle dot for the paint dot.  Letters must be
/// a1, a2, ... in order.
Expression parse_expression(std::string_view text);
FlatExpression parse_flat_expression(std::string_view text);

int letters(const Expression& e);
int letters(const FlatExpression& e);

/// All expressions over a1..an, in a fixed recursive order.
std::vector<Expression> enumerate_expressions(int n);
std::vector<FlatExpression> enumerate_flat_expressions(int n);

/// Expressions reachable in one coarsening move: removing a domain bracket,
/// removing dots (a word becomes dotted, or a bracketed segment becomes
/// several segments), merging a product of blocks into one dotted block
/// (the reverse of turning dots into ")f("), and removing a codomain bracket.
std::vector<Expression> coarsenings(const Expression& e);
/// The same moves without codomain brackets; any run of consecutive blocks
/// may merge.
std::vector<FlatExpression> coarsenings(const FlatExpression& e);

/// Forgets codomain brackets.
FlatExpression collapse_codomain(const Expression& e);

}  // namespace assoc::multiplihedron
