#pragma once

#include <string>

namespace syz {

enum class Verdict { verified, violated, hypothesis_not_met, truncated };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::verified: return "verified";
    case Verdict::violated: return "violated";
    case Verdict::hypothesis_not_met: return "hypothesis-not-met";
    case Verdict::truncated: return "truncated";
  }
  return "truncated";
}

/// Worst of two verdicts for aggregation: violated > truncated > hypothesis-not-met > verified.
inline Verdict combine(Verdict a, Verdict b) {
  auto rank = [](Verdict v) {
    switch (v) {
      case Verdict::violated: return 3;
      case Verdict::truncated: return 2;
      case Verdict::hypothesis_not_met: return 1;
      case Verdict::verified: return 0;
    }
    return 0;
  };
  return rank(a) >= rank(b) ? a : b;
}

}  // namespace syz
