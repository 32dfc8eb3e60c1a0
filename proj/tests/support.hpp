#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "stpete/game.hpp"
#include "stpete/rng.hpp"

namespace stpete::test {

// Replays a fixed list of words; throws when it runs dry.
class ScriptedWords {
public:
    ScriptedWords(std::initializer_list<std::uint32_t> words) : words_(words) {}
    explicit ScriptedWords(std::vector<std::uint32_t> words) : words_(std::move(words)) {}

    std::uint32_t operator()() {
        if (next_ >= words_.size()) throw std::out_of_range("script exhausted");
        return words_[next_++];
    }
    std::size_t consumed() const { return next_; }

private:
    std::vector<std::uint32_t> words_;
    std::size_t next_ = 0;
};

// Words that play the given tail counts in order (0 = TAIL, 1 = HEAD).
inline ScriptedWords script_for_tails(std::initializer_list<std::uint64_t> tails) {
    std::vector<std::uint32_t> w;
    for (auto t : tails) {
        w.insert(w.end(), t, 0u);
        w.push_back(1u);
    }
    return ScriptedWords(std::move(w));
}

template <WordSource G>
class CountingSource {
public:
    explicit CountingSource(G& inner) : inner_(inner) {}
    std::uint32_t operator()() {
        ++count_;
        return inner_();
    }
    std::uint64_t count() const { return count_; }

private:
    G& inner_;
    std::uint64_t count_ = 0;
};

inline std::vector<GameOutcome> outcomes_from_tails(std::initializer_list<std::uint64_t> tails) {
    std::vector<GameOutcome> out;
    for (auto t : tails) out.push_back(GameOutcome::from_tails(t));
    return out;
}

}  // namespace stpete::test
