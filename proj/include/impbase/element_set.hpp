#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace impbase {

// A subset of a universe of at most 64 elements, stored as a bit mask.
// Iteration yields members in ascending index order.
class ElementSet {
public:
    constexpr ElementSet() = default;

    static constexpr ElementSet from_mask(std::uint64_t bits) { return ElementSet(bits); }

    static ElementSet of(std::initializer_list<int> elems) {
        ElementSet s;
        for (int e : elems) s.insert(e);
        return s;
    }

    static constexpr ElementSet single(int i) { return ElementSet(std::uint64_t{1} << i); }

    // The full set {0, ..., n-1}.
    static constexpr ElementSet full(std::size_t n) {
        return ElementSet(n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n)));
    }

    constexpr std::uint64_t mask() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool contains(int i) const { return (bits_ >> i) & 1; }

    void insert(int i) { bits_ |= std::uint64_t{1} << i; }
    void erase(int i) { bits_ &= ~(std::uint64_t{1} << i); }

    constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(ElementSet other) const { return (bits_ & other.bits_) != 0; }

    friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
    friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
    friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }

    ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
    ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }

    constexpr bool operator==(const ElementSet&) const = default;

    // Lowest member, or -1 when empty.
    constexpr int first() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

    class iterator {
    public:
        using value_type = int;
        explicit constexpr iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }
        constexpr bool operator==(const iterator& o) const { return rest_ == o.rest_; }
    private:
        std::uint64_t rest_;
    };

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(count());
        for (int i : *this) out.push_back(i);
        return out;
    }

private:
    explicit constexpr ElementSet(std::uint64_t bits) : bits_(bits) {}

    std::uint64_t bits_ = 0;
};

// Total order by mask value, for use as a map key.
struct ElementSetLess {
    bool operator()(ElementSet a, ElementSet b) const { return a.mask() < b.mask(); }
};

// The ground set: an ordered list of distinct element labels. Elements are
// canonicalized to dense indices 0..n-1; labels survive only for I/O.
class Universe {
public:
    Universe() = default;
    explicit Universe(std::vector<std::string> labels);

    // Universe with labels "1", "2", ..., "n".
    static Universe numbered(std::size_t n);

    std::size_t size() const { return labels_.size(); }
    const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<int> index_of(std::string_view label) const;

    ElementSet full_set() const { return ElementSet::full(size()); }

    bool operator==(const Universe& o) const { return labels_ == o.labels_; }

private:
    std::vector<std::string> labels_;
    std::map<std::string, int, std::less<>> index_;
};

} // namespace impbase
