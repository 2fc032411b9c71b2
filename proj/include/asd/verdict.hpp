#pragma once

#include <optional>
#include <string_view>

namespace asd {

// Answer of a bounded semi-decision. `unknown` means the search bound ran out.
enum class Verdict { no, yes, unknown };

constexpr Verdict from_bool(bool b) { return b ? Verdict::yes : Verdict::no; }

constexpr Verdict operator&&(Verdict a, Verdict b) {
  if (a == Verdict::no || b == Verdict::no) return Verdict::no;
  if (a == Verdict::yes && b == Verdict::yes) return Verdict::yes;
  return Verdict::unknown;
}

constexpr Verdict operator||(Verdict a, Verdict b) {
  if (a == Verdict::yes || b == Verdict::yes) return Verdict::yes;
  if (a == Verdict::no && b == Verdict::no) return Verdict::no;
  return Verdict::unknown;
}

constexpr std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::no: return "no";
    case Verdict::yes: return "yes";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

struct SearchBound {
  int levels = 3;
  std::size_t max_candidates = 1000;
};

enum class SearchStatus { found, precondition_failed, exhausted };

template <class W>
struct SearchResult {
  SearchStatus status = SearchStatus::exhausted;
  std::optional<W> witness;

  bool found() const { return status == SearchStatus::found; }
  static SearchResult hit(W w) { return {SearchStatus::found, std::move(w)}; }
  static SearchResult failed() { return {SearchStatus::precondition_failed, std::nullopt}; }
  static SearchResult exhausted() { return {SearchStatus::exhausted, std::nullopt}; }
};

}  // namespace asd
