#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace entrolab {

/// Outcome label: an opaque atom or a tuple of labels. Product and joint
/// outcomes are tuples, so composite labels never collide with atoms.
class Label {
public:
    Label() = default;
    Label(std::string atom) : atom_(std::move(atom)) {}  // NOLINT(google-explicit-constructor)
    Label(const char* atom) : atom_(atom) {}             // NOLINT(google-explicit-constructor)

    static Label tuple(std::vector<Label> parts);
    static Label pair(Label a, Label b) { return tuple({std::move(a), std::move(b)}); }

    bool is_tuple() const noexcept { return is_tuple_; }
    const std::string& atom() const noexcept { return atom_; }
    const std::vector<Label>& parts() const noexcept { return parts_; }
    std::size_t arity() const noexcept { return parts_.size(); }
    const Label& operator[](std::size_t i) const { return parts_.at(i); }

    /// Canonical text: atoms escape '\\', '(', ')' and ','; tuples render
    /// as "(a,b,...)". parse(to_string(l)) == l for every label.
    std::string to_string() const;
    static Label parse(std::string_view text);

    friend bool operator==(const Label& a, const Label& b);
    friend std::strong_ordering operator<=>(const Label& a, const Label& b);

private:
    bool is_tuple_ = false;
    std::string atom_;
    std::vector<Label> parts_;
};

}  // namespace entrolab
