#include "ampwick/tree_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "ampwick/errors.hpp"

namespace ampwick {

namespace {

class Parser {
  public:
    explicit Parser(std::string text) : s_(strip_comments(text)) {}

    ParsedTree run() {
        ParsedTree out;
        skip_ws();
        expect('(');
        out.labels.push_back(std::nullopt);
        out.colors.push_back(EdgeColor::Blue);
        attributes(out, 0);
        children(out, 0);
        skip_ws();
        if (k_ != s_.size()) fail("trailing input");
        return out;
    }

  private:
    static std::string strip_comments(const std::string& text) {
        std::string r;
        bool comment = false;
        for (char c : text) {
            if (c == '#') comment = true;
            if (c == '\n') comment = false;
            if (!comment) r += c;
        }
        return r;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("tree parse error at offset " + std::to_string(k_) + ": " + what);
    }

    void skip_ws() {
        while (k_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[k_]))) ++k_;
    }

    void expect(char c) {
        skip_ws();
        if (k_ >= s_.size() || s_[k_] != c) fail(std::string("expected '") + c + "'");
        ++k_;
    }

    std::string word() {
        std::size_t b = k_;
        while (k_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[k_])) && s_[k_] != '(' &&
               s_[k_] != ')')
            ++k_;
        return s_.substr(b, k_ - b);
    }

    void attributes(ParsedTree& out, int v) {
        Rational value = 1, radicand = 1;
        bool has_coeff = false;
        while (true) {
            skip_ws();
            if (k_ >= s_.size()) fail("unexpected end");
            if (s_[k_] == '(' || s_[k_] == ')') break;
            std::string w = word();
            if (w == "root") {
                if (v != 0) fail("'root' on a non-root vertex");
                continue;
            }
            auto eq = w.find('=');
            if (eq == std::string::npos) fail("expected key=value, got '" + w + "'");
            std::string key = w.substr(0, eq), val = w.substr(eq + 1);
            try {
                if (key == "i") {
                    if (v != 0) fail("i= is only valid on the root");
                    out.labels[0] = std::stoi(val);
                    out.tree.root_index = std::stoi(val);
                } else if (key == "l" || key == "label") {
                    out.labels[static_cast<std::size_t>(v)] = std::stoi(val);
                } else if (key == "c" || key == "coeff") {
                    value = parse_rational(val);
                    has_coeff = true;
                } else if (key == "r") {
                    radicand = parse_rational(val);
                    has_coeff = true;
                } else if (key == "color") {
                    if (val == "b" || val == "blue")
                        out.colors[static_cast<std::size_t>(v)] = EdgeColor::Blue;
                    else if (val == "y" || val == "yellow")
                        out.colors[static_cast<std::size_t>(v)] = EdgeColor::Yellow;
                    else
                        fail("unknown color '" + val + "'");
                } else {
                    fail("unknown attribute '" + key + "'");
                }
            } catch (const ParseError&) {
                throw;
            } catch (const std::exception&) {
                fail("bad value for '" + key + "'");
            }
        }
        if (has_coeff) out.tree.set_coeff(v, RootRational(value, radicand));
    }

    void children(ParsedTree& out, int v) {
        while (true) {
            skip_ws();
            if (k_ >= s_.size()) fail("unexpected end");
            if (s_[k_] == ')') {
                ++k_;
                return;
            }
            expect('(');
            int c = out.tree.add_child(v);
            out.labels.push_back(std::nullopt);
            out.colors.push_back(EdgeColor::Blue);
            attributes(out, c);
            children(out, c);
        }
    }

    std::string s_;
    std::size_t k_ = 0;
};

void format_vertex(std::ostringstream& os, const UnlabeledTree& t, int v, const std::vector<int>* labels,
                   const std::vector<EdgeColor>* colors) {
    os << '(';
    bool first = true;
    auto sep = [&] {
        if (!first) os << ' ';
        first = false;
    };
    if (v == 0) {
        sep();
        os << "root";
        if (labels) os << " i=" << (*labels)[0];
        else if (t.root_index) os << " i=" << *t.root_index;
    } else if (labels) {
        sep();
        os << "l=" << (*labels)[static_cast<std::size_t>(v)];
    }
    const auto& c = t.coeff(v);
    if (v != 0 || c.value != 1 || c.radicand != 1) {
        sep();
        os << "c=" << to_string(c.value);
        if (c.radicand != 1) os << " r=" << to_string(c.radicand);
    }
    if (v != 0 && colors) {
        sep();
        os << "color=" << ((*colors)[static_cast<std::size_t>(v)] == EdgeColor::Yellow ? 'y' : 'b');
    }
    for (int ch : t.children(v)) {
        os << ' ';
        format_vertex(os, t, ch, labels, colors);
    }
    os << ')';
}

}  // namespace

ParsedTree parse_tree(const std::string& text) { return Parser(text).run(); }

ParsedTree read_tree_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read tree file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_tree(ss.str());
}

LabeledTree to_labeled(const ParsedTree& p) {
    LabeledTree t{p.tree, {}};
    for (std::size_t v = 0; v < p.labels.size(); ++v) {
        if (!p.labels[v]) throw ParseError("vertex " + std::to_string(v) + " has no label");
        if (*p.labels[v] < 1) throw ParseError("labels are 1-based");
        t.labels.push_back(*p.labels[v]);
    }
    return t;
}

std::string format_tree(const UnlabeledTree& t, const std::vector<int>* labels,
                        const std::vector<EdgeColor>* colors) {
    std::ostringstream os;
    format_vertex(os, t, 0, labels, colors);
    return os.str();
}

}  // namespace ampwick
