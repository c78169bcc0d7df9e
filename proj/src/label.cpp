#include "entrolab/label.hpp"

#include "entrolab/error.hpp"

namespace entrolab {

namespace {

bool is_special(char c) { return c == '\\' || c == '(' || c == ')' || c == ','; }

void render(const Label& l, std::string& out) {
    if (!l.is_tuple()) {
        for (char c : l.atom()) {
            if (is_special(c)) out.push_back('\\');
            out.push_back(c);
        }
        return;
    }
    out.push_back('(');
    for (std::size_t i = 0; i < l.arity(); ++i) {
        if (i) out.push_back(',');
        render(l[i], out);
    }
    out.push_back(')');
}

class LabelParser {
public:
    explicit LabelParser(std::string_view s) : s_(s) {}

    Label parse_all() {
        Label l = parse_one();
        if (pos_ != s_.size()) fail("trailing characters");
        return l;
    }

private:
    Label parse_one() {
        if (pos_ < s_.size() && s_[pos_] == '(') {
            ++pos_;
            std::vector<Label> parts;
            if (pos_ < s_.size() && s_[pos_] == ')') {
                ++pos_;
                return Label::tuple({});
            }
            while (true) {
                parts.push_back(parse_one());
                if (pos_ >= s_.size()) fail("unterminated tuple");
                if (s_[pos_] == ',') {
                    ++pos_;
                    continue;
                }
                if (s_[pos_] == ')') {
                    ++pos_;
                    break;
                }
                fail("unexpected character");
            }
            return Label::tuple(std::move(parts));
        }
        std::string atom;
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == '\\') {
                if (pos_ + 1 >= s_.size()) fail("dangling escape");
                atom.push_back(s_[pos_ + 1]);
                pos_ += 2;
                continue;
            }
            if (c == ',' || c == ')') break;
            if (c == '(') fail("unescaped '(' inside atom");
            atom.push_back(c);
            ++pos_;
        }
        return Label(std::move(atom));
    }

    [[noreturn]] void fail(const char* why) const {
        throw Error(ErrorCode::ParseError,
                    std::string("label '") + std::string(s_) + "' at " + std::to_string(pos_) + ": " + why);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Label Label::tuple(std::vector<Label> parts) {
    Label l;
    l.is_tuple_ = true;
    l.parts_ = std::move(parts);
    return l;
}

std::string Label::to_string() const {
    std::string out;
    render(*this, out);
    return out;
}

Label Label::parse(std::string_view text) { return LabelParser(text).parse_all(); }

bool operator==(const Label& a, const Label& b) {
    if (a.is_tuple_ != b.is_tuple_) return false;
    if (!a.is_tuple_) return a.atom_ == b.atom_;
    return a.parts_ == b.parts_;
}

std::strong_ordering operator<=>(const Label& a, const Label& b) {
    if (a.is_tuple_ != b.is_tuple_) return a.is_tuple_ ? std::strong_ordering::greater : std::strong_ordering::less;
    if (!a.is_tuple_) return a.atom_.compare(b.atom_) <=> 0;
    const std::size_t n = std::min(a.parts_.size(), b.parts_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = a.parts_[i] <=> b.parts_[i]; c != 0) return c;
    }
    return a.parts_.size() <=> b.parts_.size();
}

}  // namespace entrolab
