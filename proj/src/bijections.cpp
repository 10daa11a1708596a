#include "hvg/bijections.hpp"

#include <algorithm>
#include <string>

#include "hvg/error.hpp"
#include "hvg/realize.hpp"

namespace hvg {

// --- ParenString ---------------------------------------------------------

ParenString ParenString::trusted(std::string s) {
    ParenString p;
    p.text_ = std::move(s);
    return p;
}

ParenString ParenString::parse(std::string_view text) {
    int depth = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '[') {
            ++depth;
        } else if (c == ']') {
            if (--depth < 0)
                throw ParseError("unmatched ']' at position " + std::to_string(i + 1));
        } else {
            throw ParseError(std::string("unexpected character '") + c + "' at position " +
                             std::to_string(i + 1));
        }
    }
    if (depth != 0)
        throw ParseError(std::to_string(depth) + " unclosed '[' at end of word");
    return trusted(std::string(text));
}

// --- psi and its inverse --------------------------------------------------

namespace {

void psi_rec(const Graph& g, std::string& out) {
    if (g.size() == 1) return;
    const std::vector<int> nn = g.non_nested();
    for (std::size_t idx = 1; idx < nn.size(); ++idx) {
        const int a = nn[idx - 1] + 1;
        const int b = nn[idx];
        out += '[';
        if (a < b) psi_rec(g.induced_interval(a, b), out);
        out += ']';
    }
}

// One extra vertex in front of h, tied to every non-nested vertex of h.
Graph hat(const Graph& h) {
    std::vector<Edge> edges;
    edges.reserve(h.edge_count() + h.size());
    for (const Edge& e : h.edges()) edges.emplace_back(e.first + 1, e.second + 1);
    for (int v : h.non_nested()) edges.emplace_back(1, v + 1);
    return Graph(h.size() + 1, std::move(edges));
}

Graph psi_inv_rec(std::string_view s) {
    Graph acc = Graph::path(1);
    std::size_t pos = 0;
    while (pos < s.size()) {
        // s is balanced, so each block is a matched [...] group.
        int depth = 1;
        std::size_t end = pos + 1;
        while (depth > 0) {
            if (s[end] == '[') ++depth;
            else --depth;
            ++end;
        }
        acc = one_sum(acc, hat(psi_inv_rec(s.substr(pos + 1, end - pos - 2))));
        pos = end;
    }
    return acc;
}

} // namespace

ParenString psi(const Graph& g) {
    if (!is_distinct_realizable(g))
        throw DomainError("graph has no pairwise-distinct realization");
    std::string out;
    psi_rec(g, out);
    return ParenString::trusted(std::move(out));
}

Graph psi_inv(const ParenString& b) {
    return psi_inv_rec(b.text());
}

// --- Bracketing -----------------------------------------------------------

Bracketing Bracketing::trivial(int len) {
    if (len < 1) throw DomainError("a bracketing needs at least one letter");
    Bracketing b;
    b.blocks_.push_back({len, {}});
    return b;
}

Bracketing::Bracketing(std::vector<Block> blocks) {
    if (blocks.empty()) throw DomainError("a bracketing needs at least one letter");
    bool prev_run = false;
    for (const Block& b : blocks) {
        if (b.run > 0) {
            if (!b.sub.empty()) throw DomainError("block cannot be both run and group");
            if (prev_run) throw DomainError("adjacent letter runs must be merged");
            prev_run = true;
        } else {
            if (b.sub.size() != 1) throw DomainError("group block needs exactly one bracketing");
            if (b.sub[0].length() < 2) throw DomainError("brackets around fewer than two letters");
            prev_run = false;
        }
    }
    if (blocks.size() == 1 && blocks[0].run == 0)
        throw DomainError("outer brackets must be omitted");
    blocks_ = std::move(blocks);
}

int Bracketing::length() const {
    int len = 0;
    for (const Block& b : blocks_) len += b.run > 0 ? b.run : b.sub[0].length();
    return len;
}

std::string Bracketing::render() const {
    std::string out;
    for (const Block& b : blocks_) {
        if (b.run > 0) out.append(static_cast<std::size_t>(b.run), 'x');
        else out += "(" + b.sub[0].render() + ")";
    }
    return out;
}

namespace {

struct BracketingParser {
    std::string_view s;
    std::size_t pos = 0;
    bool lenient;

    [[noreturn]] void fail(const std::string& why, std::size_t at) const {
        throw ParseError(why + " at position " + std::to_string(at + 1));
    }

    void append(std::vector<Bracketing::Block>& blocks, Bracketing::Block b) {
        if (b.run > 0 && !blocks.empty() && blocks.back().run > 0)
            blocks.back().run += b.run;  // only reachable via lenient rewrites
        else
            blocks.push_back(std::move(b));
    }

    std::vector<Bracketing::Block> parse_blocks() {
        std::vector<Bracketing::Block> blocks;
        while (pos < s.size() && s[pos] != ')') {
            if (s[pos] == 'x') {
                int run = 0;
                while (pos < s.size() && s[pos] == 'x') ++run, ++pos;
                append(blocks, {run, {}});
            } else if (s[pos] == '(') {
                const std::size_t open = pos++;
                std::vector<Bracketing::Block> inner = parse_blocks();
                if (pos >= s.size()) fail("unclosed '('", open);
                ++pos;  // consume ')'
                if (inner.empty()) fail("empty brackets", open);
                // A group holding exactly one group is redundant.
                while (inner.size() == 1 && inner[0].run == 0) {
                    if (!lenient) fail("redundant nested brackets", open);
                    inner = inner[0].sub[0].blocks();
                }
                if (inner.size() == 1 && inner[0].run == 1) {
                    // "(x)" carries no grouping.
                    if (!lenient) fail("brackets around a single letter", open);
                    append(blocks, {1, {}});
                } else {
                    append(blocks, {0, {Bracketing(std::move(inner))}});
                }
            } else {
                fail(std::string("unexpected character '") + s[pos] + "'", pos);
            }
        }
        return blocks;
    }
};

} // namespace

Bracketing Bracketing::parse(std::string_view text, bool lenient) {
    BracketingParser parser{text, 0, lenient};
    std::vector<Block> blocks = parser.parse_blocks();
    if (parser.pos < text.size()) parser.fail("unmatched ')'", parser.pos);
    if (blocks.empty()) throw ParseError("a bracketing needs at least one letter");
    while (blocks.size() == 1 && blocks[0].run == 0) {
        if (!lenient) throw ParseError("redundant outer brackets at position 1");
        blocks = blocks[0].sub[0].blocks();
    }
    return Bracketing(std::move(blocks));
}

// --- xi and its inverse ---------------------------------------------------

Graph xi(const Bracketing& b) {
    Graph acc = Graph::path(1);
    std::vector<Edge> spans;
    int prefix = 0;
    for (const Bracketing::Block& block : b.blocks()) {
        const int len = block.run > 0 ? block.run : block.sub[0].length();
        acc = one_sum(acc, block.run > 0 ? Graph::path(block.run + 1) : xi(block.sub[0]));
        if (block.run == 0) spans.emplace_back(prefix + 1, prefix + len + 1);
        prefix += len;
    }
    std::vector<Edge> edges = acc.edges();
    edges.insert(edges.end(), spans.begin(), spans.end());
    return Graph(acc.size(), std::move(edges));
}

namespace {

// g is a horizontal visibility graph without the edge {1, n}.  Walk its
// non-nested vertices: a unit gap contributes a letter of a run, a wider
// gap a parenthesized block whose content is the interval stripped of
// its spanning edge.
std::vector<Bracketing::Block> xi_inv_blocks(const Graph& g) {
    const std::vector<int> nn = g.non_nested();
    std::vector<Bracketing::Block> blocks;
    int run = 0;
    for (std::size_t idx = 1; idx < nn.size(); ++idx) {
        const int a = nn[idx - 1];
        const int b = nn[idx];
        if (b == a + 1) {
            ++run;
            continue;
        }
        if (run > 0) {
            blocks.push_back({run, {}});
            run = 0;
        }
        const Graph interval = g.induced_interval(a, b);
        const Graph stripped = remove_edge(interval, {1, interval.size()});
        blocks.push_back({0, {Bracketing(xi_inv_blocks(stripped))}});
    }
    if (run > 0) blocks.push_back({run, {}});
    return blocks;
}

} // namespace

Bracketing xi_inv(const Graph& g) {
    if (g.size() < 2) throw DomainError("bracketing encoding needs at least two vertices");
    if (!is_hvg(g)) throw DomainError("graph is not a horizontal visibility graph");
    if (g.size() == 2) return Bracketing::trivial(1); // the sole edge is a path edge
    if (g.has_edge(1, g.size()))
        throw DomainError("graph with edge {1," + std::to_string(g.size()) +
                          "} has no bracketing encoding");
    return Bracketing(xi_inv_blocks(g));
}

Graph toggle_top_edge(const Graph& g) {
    const int n = g.size();
    if (n < 3) throw DomainError("toggling the top edge needs at least three vertices");
    if (!is_hvg(g)) throw DomainError("graph is not a horizontal visibility graph");
    if (g.has_edge(1, n)) return remove_edge(g, {1, n});
    return add_edge_non_nested(g, 1, n);
}

} // namespace hvg
