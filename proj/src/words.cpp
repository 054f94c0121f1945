#include "skewx/words.hpp"

namespace skewx {

Word::Word(unsigned arity, std::vector<unsigned> letters)
    : arity_(check_arity(arity)), letters_(std::move(letters)) {
    for (unsigned j : letters_)
        if (j < 1 || j > arity_)
            throw DomainError("word letter " + std::to_string(j) + " outside 1.." +
                              std::to_string(arity_));
}

Word Word::concat(const Word& v) const {
    if (arity_ != v.arity_) throw DomainError("word arity mismatch in concatenation");
    std::vector<unsigned> out = letters_;
    out.insert(out.end(), v.letters_.begin(), v.letters_.end());
    return Word(arity_, std::move(out));
}

Word Word::append(unsigned j) const {
    std::vector<unsigned> out = letters_;
    out.push_back(j);
    return Word(arity_, std::move(out));
}

Word Word::parent() const {
    if (empty()) throw DomainError("the empty word has no parent");
    std::vector<unsigned> out(letters_.begin(), letters_.end() - 1);
    return Word(arity_, std::move(out));
}

std::string Word::str() const {
    if (empty()) return "1";
    std::string s;
    for (size_t i = 0; i < letters_.size(); ++i) {
        if (i) s += "*";
        s += "x" + std::to_string(letters_[i]);
    }
    return s;
}

int cmp_deglex(const Word& u, const Word& v) {
    if (u.length() != v.length()) return u.length() < v.length() ? -1 : 1;
    for (size_t i = 0; i < u.length(); ++i) {
        if (u.letter(i) != v.letter(i)) return u.letter(i) < v.letter(i) ? -1 : 1;
    }
    return 0;
}

std::vector<Word> enumerate_words(size_t len, unsigned arity, size_t cap) {
    // n^r with overflow guard
    size_t count = 1;
    for (size_t i = 0; i < len; ++i) {
        if (count > cap / arity) throw CapExceeded("word enumeration exceeds cap of " +
                                                   std::to_string(cap));
        count *= arity;
    }
    if (count > cap) throw CapExceeded("word enumeration exceeds cap of " + std::to_string(cap));

    std::vector<Word> out;
    out.reserve(count);
    std::vector<unsigned> letters(len, 1);
    for (size_t k = 0; k < count; ++k) {
        out.emplace_back(arity, letters);
        // increment least-significant position last so the listing is ascending lex
        for (size_t p = len; p-- > 0;) {
            if (++letters[p] <= arity) break;
            letters[p] = 1;
        }
    }
    return out;
}

Int word_index(const Word& w) {
    if (w.empty()) throw DomainError("word_index requires a nonempty word");
    Int idx = 0;
    for (unsigned j : w.letters()) idx = idx * w.arity() + (j - 1);
    return idx + 1;
}

}  // namespace skewx
