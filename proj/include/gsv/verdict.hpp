#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gsv {

// The canonically-first counterexample of an exhaustive check: which law broke,
// at which probe object, on which input, and both evaluated sides.
struct Witness {
  std::string law;
  std::string object;
  std::string input;
  std::string lhs;
  std::string rhs;
};

struct Verdict {
  bool pass = true;
  std::uint64_t checks = 0;
  std::optional<Witness> witness;

  static Verdict ok(std::uint64_t n) { return Verdict{true, n, std::nullopt}; }
  static Verdict bad(Witness w, std::uint64_t n) { return Verdict{false, n, std::move(w)}; }
};

// A named bundle of verdicts; passes when every item passes.
struct LawReport {
  std::vector<std::pair<std::string, Verdict>> items;

  void add(std::string name, Verdict v) { items.emplace_back(std::move(name), std::move(v)); }

  void merge(const LawReport& other) {
    for (const auto& it : other.items) items.push_back(it);
  }

  bool pass() const {
    for (const auto& [name, v] : items)
      if (!v.pass) return false;
    return true;
  }

  std::uint64_t checks() const {
    std::uint64_t n = 0;
    for (const auto& [name, v] : items) n += v.checks;
    return n;
  }

  const Witness* first_witness() const {
    for (const auto& [name, v] : items)
      if (!v.pass && v.witness) return &*v.witness;
    return nullptr;
  }
};

}  // namespace gsv
