#pragma once

#include <cstdlib>
#include <string>
#include <vector>

#include "jmrep/errors.hpp"
#include "jmrep/genus.hpp"

namespace jmrep {

/// Default length guard for word substitution.
inline constexpr std::size_t kDefaultWordLimit = 10'000;

/// Word in the free generators xi_1..xi_{2g} (xi_i = alpha_i, xi_{i+g} = beta_i).
/// Letter k > 0 is xi_k, letter -k is its inverse. Stored as given; use
/// word_reduce() for the freely reduced form.
class FreeWord {
public:
    explicit FreeWord(Genus g) : genus_(g) {}

    FreeWord(Genus g, std::vector<int> letters) : genus_(g), letters_(std::move(letters)) {
        for (int l : letters_)
            if (l == 0 || std::abs(l) > g.dim())
                throw OutOfRange("letter " + std::to_string(l) + " out of range for genus " + std::to_string(g.value()));
    }

    static FreeWord generator(Genus g, int k) { return FreeWord(g, {k}); }

    Genus genus() const noexcept { return genus_; }
    const std::vector<int>& letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    FreeWord inverse() const {
        FreeWord w(genus_);
        w.letters_.assign(letters_.rbegin(), letters_.rend());
        for (auto& l : w.letters_) l = -l;
        return w;
    }

    /// Concatenation (not reduced).
    friend FreeWord operator*(FreeWord a, const FreeWord& b) {
        require_same_genus(a.genus_, b.genus_, "word concatenation");
        a.letters_.insert(a.letters_.end(), b.letters_.begin(), b.letters_.end());
        return a;
    }

    friend bool operator==(const FreeWord&, const FreeWord&) = default;

private:
    Genus genus_;
    std::vector<int> letters_;
};

namespace detail {

/// Appends letters to an already reduced buffer, cancelling as it goes.
class ReducingBuffer {
public:
    explicit ReducingBuffer(std::size_t limit) : limit_(limit) {}

    void push(int letter) {
        if (!out_.empty() && out_.back() == -letter) {
            out_.pop_back();
            return;
        }
        out_.push_back(letter);
        if (out_.size() > limit_) throw WordTooLong("word exceeds " + std::to_string(limit_) + " letters");
    }
    void push_word(const std::vector<int>& letters, bool inverted) {
        if (inverted)
            for (auto it = letters.rbegin(); it != letters.rend(); ++it) push(-*it);
        else
            for (int l : letters) push(l);
    }
    std::vector<int> take() && { return std::move(out_); }

private:
    std::size_t limit_;
    std::vector<int> out_;
};

}  // namespace detail

inline FreeWord word_reduce(const FreeWord& w) {
    detail::ReducingBuffer buf(static_cast<std::size_t>(-1));
    buf.push_word(w.letters(), false);
    return FreeWord(w.genus(), std::move(buf).take());
}

/// Endomorphism of the free group given by the images of xi_1..xi_{2g}.
class EndomorphismSpec {
public:
    EndomorphismSpec(Genus g, std::vector<FreeWord> images) : genus_(g), images_(std::move(images)) {
        if (static_cast<int>(images_.size()) != g.dim())
            throw OutOfRange("endomorphism needs " + std::to_string(g.dim()) + " generator images");
        for (const auto& w : images_) require_same_genus(g, w.genus(), "EndomorphismSpec");
    }

    static EndomorphismSpec identity(Genus g) {
        std::vector<FreeWord> images;
        for (int k = 1; k <= g.dim(); ++k) images.push_back(FreeWord::generator(g, k));
        return EndomorphismSpec(g, std::move(images));
    }

    Genus genus() const noexcept { return genus_; }
    const std::vector<FreeWord>& images() const noexcept { return images_; }

    /// Image of xi_k, 1-based.
    const FreeWord& image(int k) const { return images_.at(static_cast<std::size_t>(k - 1)); }

    friend bool operator==(const EndomorphismSpec&, const EndomorphismSpec&) = default;

private:
    Genus genus_;
    std::vector<FreeWord> images_;
};

/// Substitutes images for letters and freely reduces. Throws WordTooLong
/// once the reduced result exceeds `limit` letters.
inline FreeWord endo_apply(const EndomorphismSpec& e, const FreeWord& w, std::size_t limit = kDefaultWordLimit) {
    require_same_genus(e.genus(), w.genus(), "endo_apply");
    detail::ReducingBuffer buf(limit);
    for (int l : w.letters()) buf.push_word(e.image(std::abs(l)).letters(), l < 0);
    return FreeWord(w.genus(), std::move(buf).take());
}

/// The composite "apply e2, then e1": xi_i -> e1(e2(xi_i)).
inline EndomorphismSpec endo_compose(const EndomorphismSpec& e1, const EndomorphismSpec& e2,
                                     std::size_t limit = kDefaultWordLimit) {
    require_same_genus(e1.genus(), e2.genus(), "endo_compose");
    std::vector<FreeWord> images;
    images.reserve(e2.images().size());
    for (const auto& w : e2.images()) images.push_back(endo_apply(e1, w, limit));
    return EndomorphismSpec(e1.genus(), std::move(images));
}

/// prod_i [alpha_i, beta_i] with [x, y] = x y x^-1 y^-1.
inline FreeWord boundary_word(Genus g) {
    std::vector<int> letters;
    const int h = g.value();
    for (int i = 1; i <= h; ++i) letters.insert(letters.end(), {i, i + h, -i, -(i + h)});
    return FreeWord(g, std::move(letters));
}

}  // namespace jmrep
