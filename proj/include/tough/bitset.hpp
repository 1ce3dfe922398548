#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace tough {

// Fixed-universe dynamic bitset used for vertex sets.
class VertexSet {
  public:
    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe), words_((universe + 63) / 64, 0) {}

    static VertexSet of(int universe, std::initializer_list<int> vs) {
        VertexSet s(universe);
        for (int v : vs) s.set(v);
        return s;
    }

    static VertexSet from_word(int universe, std::uint64_t w) {
        VertexSet s(universe);
        if (!s.words_.empty()) s.words_[0] = w;
        return s;
    }

    int universe_size() const { return n_; }

    void check(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
    }

    void set(int v) {
        check(v);
        words_[v >> 6] |= (std::uint64_t{1} << (v & 63));
    }
    void reset(int v) {
        check(v);
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
    bool test(int v) const {
        check(v);
        return (words_[v >> 6] >> (v & 63)) & 1;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    std::uint64_t word(int i) const { return words_[i]; }
    int word_count() const { return static_cast<int>(words_.size()); }

    // valid only when the universe fits one word
    std::uint64_t as_word() const {
        if (n_ > 64) throw std::logic_error("vertex set wider than one word");
        return words_.empty() ? 0 : words_[0];
    }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        for (int i = 0; i < word_count(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                out.push_back(i * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
        return out;
    }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    VertexSet& operator|=(const VertexSet& o) {
        for (int i = 0; i < word_count(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (int i = 0; i < word_count(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    bool is_subset_of(const VertexSet& o) const {
        for (int i = 0; i < word_count(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        for (int i = 0; i < word_count(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

  private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace tough
