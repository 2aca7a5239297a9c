#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qgr/monomial.hpp"
#include "qgr/poset.hpp"
#include "qgr/quiver.hpp"

namespace qgr::oracles {

// Deliberately naive implementations used to audit the fast paths.
// They live in the shipped library so the CLI's --verify flag can
// reach them; caps are hard errors, never silent truncation.

// Every path of length <= max_len, keyed by (src, tgt, len).
std::map<std::tuple<int, int, unsigned>, std::vector<Path>> enumerate_paths(const Quiver& q,
                                                                            unsigned max_len,
                                                                            std::size_t cap = 2'000'000);

Int count_paths_bruteforce(const Quiver& q, const std::string& u, const std::string& v,
                           unsigned len, std::size_t cap = 2'000'000);

// Number of words avoiding every relation as a subword, per length 0..max_len.
std::vector<Int> enumerate_normal_words(const MonomialPresentation& a, unsigned max_len,
                                        std::size_t cap = 2'000'000);

// Exhaustive permutation search; |P1|, |P2| <= 8.
std::optional<std::vector<std::size_t>> poset_iso_bruteforce(const Poset& p1, const Poset& p2);

// All posets on n labeled elements whose identity map is a linear
// extension, deduplicated up to isomorphism.
std::vector<Poset> all_posets(std::size_t n);

// Deterministic xorshift-based generator; identical streams on every
// platform for a fixed seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next() {
    std::uint64_t x = state_;
    x ^= x << 13;
    x ^= x >> 7;
    x ^= x << 17;
    return state_ = x;
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

// Seed for default-constructed corpus parameters: QGR_SEED from the
// environment when set, otherwise the fallback.
std::uint64_t seed_from_env(std::uint64_t fallback);

struct CorpusParams {
  std::size_t count = 200;
  std::size_t max_vertices = 6;
  std::size_t max_arrows = 10;
  std::uint64_t seed = seed_from_env(20240901);
};

// Reproducible random quivers within the size bounds.
std::vector<Quiver> random_corpus(const CorpusParams& params);

// First `count` finite-GK members of the seeded stream.
std::vector<Quiver> finite_gk_corpus(const CorpusParams& params);

// The generated quivers bucketed by the growth verdict.
struct Corpus {
  CorpusParams params;
  std::vector<Quiver> finite_gk;
  std::vector<Quiver> infinite_gk;
};

Corpus generate_corpus(const CorpusParams& params);

struct SignatureCheck {
  bool agrees;
  std::string note;
};

// Desk-scale consistency between the structural GK verdict and the
// observed path counts over lengths 10..40. A finite verdict of degree
// d must keep r_n / n^(d-1) inside a 64x envelope; an infinite verdict
// must show geometric growth at rate 11/10 along some stride <= 12
// (strides absorb the modular oscillation of cycle lengths).
SignatureCheck growth_signature_check(const Quiver& q);

}  // namespace qgr::oracles
