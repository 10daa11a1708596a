#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hvg/graph.hpp"

namespace hvg {

// Balanced word over '[' and ']'.  Instances are always balanced; parse
// rejects anything else with the offending 1-based position.
class ParenString {
public:
    ParenString() = default;  // empty word

    static ParenString parse(std::string_view text);

    const std::string& text() const { return text_; }
    int pairs() const { return static_cast<int>(text_.size() / 2); }

    friend bool operator==(const ParenString&, const ParenString&) = default;

private:
    friend ParenString psi(const Graph&);
    friend std::vector<ParenString> all_balanced_parens(int);
    static ParenString trusted(std::string s);

    std::string text_;
};

// Bracketing of a row of letters 'x' in normal form: a sequence of
// blocks, each either a maximal run of letters or a parenthesized
// sub-bracketing of at least two letters; runs are never adjacent, and a
// complete bracketing never consists of one parenthesized block (outer
// brackets are always omitted).
class Bracketing {
public:
    struct Block {
        int run = 0;                  // > 0: run of that many letters
        std::vector<Bracketing> sub;  // otherwise exactly one wrapped bracketing
        friend bool operator==(const Block&, const Block&) = default;
    };

    // Run of `len` letters, len >= 1.
    static Bracketing trivial(int len);

    // Assemble from blocks; validates normal form.
    explicit Bracketing(std::vector<Block> blocks);

    // Strict mode rejects words outside normal form ("(x)", "((xx))",
    // redundant outer brackets); lenient mode rewrites them into it.
    static Bracketing parse(std::string_view text, bool lenient = false);

    std::string render() const;
    int length() const;  // number of letters
    const std::vector<Block>& blocks() const { return blocks_; }

    friend bool operator==(const Bracketing&, const Bracketing&) = default;

private:
    Bracketing() = default;

    std::vector<Block> blocks_;
};

// Bijection from graphs with a pairwise-distinct realization on n
// vertices to balanced words of n-1 bracket pairs.  Throws when g has no
// such realization.
ParenString psi(const Graph& g);

// Inverse of psi; total on balanced words.
Graph psi_inv(const ParenString& b);

// Bijection from bracketings of n letters to the horizontal visibility
// graphs on n+1 vertices without the edge {1, n+1}.
Graph xi(const Bracketing& b);

// Inverse of xi.  Requires a horizontal visibility graph on >= 2
// vertices without the edge {1, n}.
Bracketing xi_inv(const Graph& g);

// Flip the presence of edge {1, n}; an involution on horizontal
// visibility graphs with n >= 3.
Graph toggle_top_edge(const Graph& g);

} // namespace hvg
