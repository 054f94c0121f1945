#ifndef SKEWX_WORDS_HPP
#define SKEWX_WORDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "skewx/errors.hpp"
#include "skewx/rings.hpp"

namespace skewx {

inline constexpr size_t kDefaultWordCap = 100000;

/// A monomial of the free monoid on generators x1..xn. Letters are 1-based
/// generator indices; the empty sequence is the monoid identity.
class Word {
public:
    explicit Word(unsigned arity) : arity_(check_arity(arity)) {}
    Word(unsigned arity, std::vector<unsigned> letters);

    unsigned arity() const { return arity_; }
    size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const std::vector<unsigned>& letters() const { return letters_; }
    unsigned letter(size_t i) const { return letters_[i]; }

    Word concat(const Word& v) const;
    Word append(unsigned j) const;
    /// All letters except the last (requires nonempty).
    Word parent() const;

    bool operator==(const Word& o) const {
        return arity_ == o.arity_ && letters_ == o.letters_;
    }
    bool operator!=(const Word& o) const { return !(*this == o); }

    /// "1" for the identity, otherwise "x1*x2*x1".
    std::string str() const;

private:
    static unsigned check_arity(unsigned n) {
        if (n == 0) throw DomainError("word arity must be positive");
        return n;
    }
    unsigned arity_;
    std::vector<unsigned> letters_;
};

/// Deglex: shorter words first, equal lengths lexicographically. A monomial
/// well-order with minimum 1.
int cmp_deglex(const Word& u, const Word& v);

struct DeglexLess {
    bool operator()(const Word& a, const Word& b) const { return cmp_deglex(a, b) < 0; }
};

/// The n^r words of length r, ascending lex. Throws CapExceeded when n^r > cap.
std::vector<Word> enumerate_words(size_t len, unsigned arity, size_t cap = kDefaultWordCap);

/// 1-based position of w within the lex listing of its length class;
/// satisfies index(v*x_q) = n*(index(v) - 1) + q.
Int word_index(const Word& w);

}  // namespace skewx

#endif
