#pragma once

// Packed bitvector used for cube-complex vertices (one bit per wall).
// Bits are stored MSB-first inside each 64-bit word so that comparing the
// word arrays as unsigned integers reproduces lexicographic order of the
// corresponding 0/1 strings.

#include <algorithm>
#include <cstdint>
#include <cstddef>
#include <bit>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubix {

class Bitvec {
public:
    Bitvec() : size_(0) {}
    explicit Bitvec(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

    static Bitvec from_string(const std::string& s) {
        Bitvec b(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1') b.set(i, true);
            else if (s[i] != '0') throw std::invalid_argument("bit string must be 0/1");
        }
        return b;
    }

    std::size_t size() const { return size_; }

    bool get(std::size_t i) const {
        return (words_[i >> 6] >> shift(i)) & 1u;
    }
    void set(std::size_t i, bool v) {
        if (v) words_[i >> 6] |= (std::uint64_t{1} << shift(i));
        else   words_[i >> 6] &= ~(std::uint64_t{1} << shift(i));
    }
    void flip(std::size_t i) {
        words_[i >> 6] ^= (std::uint64_t{1} << shift(i));
    }
    Bitvec with_flipped(std::size_t i) const {
        Bitvec b = *this;
        b.flip(i);
        return b;
    }

    std::size_t hamming(const Bitvec& o) const {
        std::size_t d = 0;
        for (std::size_t w = 0; w < words_.size(); ++w)
            d += std::popcount(words_[w] ^ o.words_[w]);
        return d;
    }

    // Coordinatewise majority of three vectors of equal length.
    static Bitvec majority(const Bitvec& a, const Bitvec& b, const Bitvec& c) {
        Bitvec m(a.size_);
        for (std::size_t w = 0; w < m.words_.size(); ++w)
            m.words_[w] = (a.words_[w] & b.words_[w]) |
                          (a.words_[w] & c.words_[w]) |
                          (b.words_[w] & c.words_[w]);
        return m;
    }

    // Copy with the given length; new bits are zero, excess bits dropped.
    Bitvec resized(std::size_t n) const {
        Bitvec b(n);
        for (std::size_t i = 0; i < std::min(n, size_); ++i) b.set(i, get(i));
        return b;
    }

    std::string to_string() const {
        std::string s(size_, '0');
        for (std::size_t i = 0; i < size_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

    bool operator==(const Bitvec& o) const {
        return size_ == o.size_ && words_ == o.words_;
    }
    bool operator!=(const Bitvec& o) const { return !(*this == o); }
    // Lexicographic order on the 0/1 strings (sizes assumed equal in practice;
    // shorter strings compare as their padded prefix).
    bool operator<(const Bitvec& o) const {
        std::size_t nw = std::min(words_.size(), o.words_.size());
        for (std::size_t w = 0; w < nw; ++w)
            if (words_[w] != o.words_[w]) return words_[w] < o.words_[w];
        return size_ < o.size_;
    }

    std::size_t hash() const {
        std::size_t h = size_;
        for (std::uint64_t w : words_)
            h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }

private:
    static unsigned shift(std::size_t i) { return 63u - (i & 63u); }
    std::size_t size_;
    std::vector<std::uint64_t> words_;
};

struct BitvecHash {
    std::size_t operator()(const Bitvec& b) const { return b.hash(); }
};

} // namespace cubix
