#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace m3s {

// Fixed-length bit vector used for assignments and variable masks.
// Unused high bits of the last word are kept zero so that word-wise
// operations (equality, popcount, hashing) need no special casing.
class Bits {
public:
    Bits() = default;

    explicit Bits(std::size_t n, bool value = false)
        : n_(n), words_(word_count(n), value ? ~std::uint64_t{0} : 0) {
        trim();
    }

    static Bits from_string(std::string_view s) {
        Bits b(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1')
                b.set(i, true);
            else if (s[i] != '0')
                throw std::invalid_argument("Bits::from_string: expected '0' or '1'");
        }
        return b;
    }

    std::string to_string() const {
        std::string s(n_, '0');
        for (std::size_t i = 0; i < n_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

    std::size_t size() const { return n_; }
    bool empty() const { return n_ == 0; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    bool operator[](std::size_t i) const { return get(i); }

    void set(std::size_t i, bool v) {
        const std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= m;
        else
            words_[i >> 6] &= ~m;
    }

    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    std::span<const std::uint64_t> words() const { return words_; }

    Bits& operator&=(const Bits& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bits& operator|=(const Bits& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bits& operator^=(const Bits& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }
    // a &= ~b
    Bits& and_not(const Bits& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    void invert() {
        for (auto& w : words_) w = ~w;
        trim();
    }

    friend Bits operator^(Bits a, const Bits& b) { return a ^= b; }
    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }

    friend bool operator==(const Bits& a, const Bits& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }

private:
    static std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

    void trim() {
        if (n_ & 63) words_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitsHash {
    std::size_t operator()(const Bits& b) const {
        std::uint64_t h = 0xcbf29ce484222325ull;
        auto mix = [&h](std::uint64_t v) {
            h ^= v;
            h *= 0x100000001b3ull;
        };
        mix(b.size());
        for (auto w : b.words()) mix(w);
        return static_cast<std::size_t>(h);
    }
};

} // namespace m3s
