#include "snprkit/enewick.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace snprkit {

parse_error::parse_error(const std::string& what, std::size_t position)
    : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
      position(position) {}

// --- parser -------------------------------------------------------------------

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    GraphDraft run() {
        skip_ws();
        int top = parse_node();
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != ';') throw parse_error("expected ';'", pos_);
        ++pos_;
        skip_ws();
        if (pos_ != s_.size()) throw parse_error("trailing characters after ';'", pos_);

        // The outermost wrapper is the pendant root when it already has the
        // right shape; otherwise a fresh root is implied above the top node.
        bool reusable = draft_.at(top).out.size() == 1 && draft_.at(top).label == 0 &&
                        !is_hybrid_[top];
        if (!reusable) {
            int rho = new_vertex();
            draft_.add_edge(rho, top);
        }
        return std::move(draft_);
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
    GraphDraft draft_;
    std::map<int, int> hybrid_;          // tag -> vertex
    std::vector<char> is_hybrid_;

    int new_vertex(int label = 0) {
        int v = draft_.add_vertex(label);
        is_hybrid_.push_back(0);
        return v;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool label_char(char c) const {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-';
    }

    int parse_hybrid_tag() {
        // called at '#'
        ++pos_;
        if (pos_ >= s_.size() || (s_[pos_] != 'H' && s_[pos_] != 'h'))
            throw parse_error("expected 'H' after '#'", pos_);
        ++pos_;
        std::size_t d0 = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == d0) throw parse_error("expected digits after '#H'", pos_);
        return std::stoi(s_.substr(d0, pos_ - d0));
    }

    int hybrid_vertex(int tag) {
        auto it = hybrid_.find(tag);
        if (it != hybrid_.end()) return it->second;
        int v = new_vertex();
        is_hybrid_[v] = 1;
        hybrid_.emplace(tag, v);
        return v;
    }

    int parse_node() {
        skip_ws();
        if (pos_ >= s_.size()) throw parse_error("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            std::vector<int> kids;
            kids.push_back(parse_node());
            skip_ws();
            while (pos_ < s_.size() && s_[pos_] == ',') {
                ++pos_;
                kids.push_back(parse_node());
                skip_ws();
            }
            if (pos_ >= s_.size() || s_[pos_] != ')')
                throw parse_error("expected ')'", pos_);
            ++pos_;
            skip_ws();
            int label = 0;
            if (pos_ < s_.size() && label_char(s_[pos_])) label = parse_label();
            skip_ws();
            int v;
            if (pos_ < s_.size() && s_[pos_] == '#') {
                v = hybrid_vertex(parse_hybrid_tag());
                if (label != 0) draft_.at(v).label = label;
            } else {
                v = new_vertex(label);
            }
            for (int k : kids) draft_.add_edge(v, k);
            return v;
        }
        if (c == '#') {
            return hybrid_vertex(parse_hybrid_tag());
        }
        if (label_char(c)) {
            int label = parse_label();
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '#') {
                int v = hybrid_vertex(parse_hybrid_tag());
                draft_.at(v).label = label;
                return v;
            }
            return new_vertex(label);
        }
        throw parse_error(std::string("unexpected character '") + c + "'", pos_);
    }

    int parse_label() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && label_char(s_[pos_])) ++pos_;
        const std::string tok = s_.substr(start, pos_ - start);
        try {
            std::size_t used = 0;
            int value = std::stoi(tok, &used);
            if (used != tok.size() || value <= 0)
                throw parse_error("leaf labels must be positive integers, got '" + tok + "'", start);
            return value;
        } catch (const std::logic_error&) {
            throw parse_error("leaf labels must be positive integers, got '" + tok + "'", start);
        }
    }
};

}  // namespace

GraphDraft parse_enewick_draft(const std::string& text) { return Parser(text).run(); }

Network parse_enewick(const std::string& text) {
    return Network::from_draft(parse_enewick_draft(text));
}

// --- canonical serialization ----------------------------------------------------

namespace {

// Emits one ordering of the network below `start`, comparing against the best
// string seen so far and giving up as soon as the emission can no longer win.
struct Serializer {
    const Network& n;
    const std::vector<int>& swap_slot;  // per-vertex slot into mask, or -1
    std::uint64_t mask = 0;
    const std::string* best = nullptr;

    std::string out;
    std::vector<int> hybrid_no;
    int next_hybrid = 1;
    bool strictly_less = false;

    explicit Serializer(const Network& net, const std::vector<int>& slots)
        : n(net), swap_slot(slots), hybrid_no(net.vertex_count(), 0) {}

    bool put(char c) {
        std::size_t p = out.size();
        out.push_back(c);
        if (strictly_less || !best) return true;
        if (p >= best->size()) return false;   // longer than best with equal prefix
        if (c < (*best)[p]) strictly_less = true;
        return c <= (*best)[p];
    }

    bool put_str(const std::string& s) {
        for (char c : s)
            if (!put(c)) return false;
        return true;
    }

    bool emit(int v) {
        if (n.kind(v) == VertexKind::leaf) return put_str(std::to_string(n.label(v)));
        if (n.kind(v) == VertexKind::reticulation) {
            if (hybrid_no[v] != 0) return put('#') && put('H') && put_str(std::to_string(hybrid_no[v]));
            hybrid_no[v] = next_hybrid++;
            int tag = hybrid_no[v];
            if (!put('(') || !emit(n.children(v)[0]) || !put(')')) return false;
            return put('#') && put('H') && put_str(std::to_string(tag));
        }
        // inner tree vertex (or a sub-DAG entry point with two children)
        const auto& ch = n.children(v);
        int a = ch[0], b = ch.size() > 1 ? ch[1] : -1;
        if (b < 0) {  // root acting as entry point inside a sub-DAG
            return put('(') && emit(a) && put(')');
        }
        if (swap_slot[v] >= 0 && ((mask >> swap_slot[v]) & 1)) std::swap(a, b);
        return put('(') && emit(a) && put(',') && emit(b) && put(')');
    }
};

std::string minimal_serialization(const Network& n, int start, bool wrap) {
    std::vector<int> slots(n.vertex_count(), -1);
    int nslots = 0;
    // only vertices in the sub-DAG with two distinct children can matter
    for (int v : n.descendants_including(start))
        if (n.children(v).size() == 2 && n.children(v)[0] != n.children(v)[1])
            slots[v] = nslots++;

    std::string best;
    for (std::uint64_t mask = 0; mask < (1ull << nslots); ++mask) {
        Serializer ser(n, slots);
        ser.mask = mask;
        ser.best = best.empty() ? nullptr : &best;
        bool complete = true;
        if (wrap && !ser.put('(')) complete = false;
        if (complete && !ser.emit(start)) complete = false;
        if (complete && wrap && !(ser.put(')') && ser.put(';'))) complete = false;
        if (!complete) continue;
        if (best.empty() || ser.out < best) best = std::move(ser.out);
    }
    return best;
}

}  // namespace

std::string canonical_enewick(const Network& n) {
    return minimal_serialization(n, n.crown(), /*wrap=*/true);
}

std::string canonical_subdag(const Network& n, int v) {
    return minimal_serialization(n, v, /*wrap=*/false);
}

// --- files ---------------------------------------------------------------------

std::vector<Network> read_enewick_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::vector<Network> out;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t a = line.find_first_not_of(" \t\r\n");
        if (a == std::string::npos) continue;
        if (line[a] == '[') continue;  // comment line
        out.push_back(parse_enewick(line));
    }
    return out;
}

Network read_single_enewick(const std::string& path_or_inline) {
    if (path_or_inline.find('(') != std::string::npos) return parse_enewick(path_or_inline);
    auto nets = read_enewick_file(path_or_inline);
    if (nets.empty()) throw std::runtime_error("no network found in " + path_or_inline);
    return nets.front();
}

}  // namespace snprkit
