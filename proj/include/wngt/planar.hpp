// Planar model: zigzag lines between a bottom mirror and a top mirror.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "wngt/weyl.hpp"

namespace wngt {

enum class EventKind { Cross, Top, Bottom, Pi };

struct Event {
  EventKind kind = EventKind::Cross;
  int slot = 0;  // Cross: upper slot i of the pair (i, i+1); Top: 1; Bottom: n
  bool operator==(const Event&) const = default;
};

// Events in reading order (right to left), first event first. Always a
// B-model configuration; C/D words are expanded through s0' = 0 1 0, sn' = n n-1 n.
struct Configuration {
  int n = 0;
  std::vector<Event> events;
  bool operator==(const Configuration&) const = default;
};

struct NotReducedConfig : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidData : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ParityViolation : std::runtime_error {
  std::string which;  // "top" or "bottom"
  explicit ParityViolation(std::string w)
      : std::runtime_error("odd number of " + w + " reflections"), which(std::move(w)) {}
};

struct LineProfile {
  int t_count = 0, b_count = 0;
  enum class First { None, Top, Bottom } first = First::None;
};

// B-model word of a configuration (Pi marks moved to the front by conjugation).
Word b_word_from_config(const Configuration& cfg);
// Word in the generators of sys. C/D: grouped triples become s0', sn';
// otherwise the element is regrouped algebraically.
Word word_from_config(const System& sys, const Configuration& cfg);
// Inverse direction; C/D generators are expanded to B events.
Configuration config_from_word(const System& sys, const Word& w);

// Final absolute angles delta(b) + w(1..n), read as the element (b, w).
Element element_from_angles(const System& sys, const Configuration& cfg);
// Angles before each event, as affine roots of sys (C/D: one root per grouped event).
std::vector<AffineRoot> angles_as_lambda(const System& sys, const Configuration& cfg);
// Reflection counts per line (indexed by the starting line number).
std::vector<LineProfile> line_profiles(const Configuration& cfg);

struct BPositiveData {
  int n = 0, u = 0, v = 1;
  std::vector<int> p, t;
};
void validate(const BPositiveData& d);  // throws InvalidData
// The element b (w0' dot_w0'^b)^-1 on the subdiagram without alpha_1..alpha_u.
Element bpositive_element(const BPositiveData& d);
Configuration config_from_bpositive(const BPositiveData& d);
// All data for rank n with t_r <= t_max.
std::vector<BPositiveData> bpositive_data(int n, int t_max);

// Lexicographic sweep: at each step the smallest generator in lambda of the rest.
Configuration config_from_element(const System& b_sys, const Element& e);

// Mirror swap: conjugation by pi_n in B.
Configuration iota_b(const Configuration& cfg);
Element iota_b_element(const System& b_sys, const Element& e);
// Conjugation by the B generator s0 on C-words: swaps indices 0 and 1.
std::vector<int> iota_c(const std::vector<int>& c_word);
Element iota_c_element(const System& sys, const Element& e);

enum class Side { TopLeft, TopRight, BottomLeft, BottomRight };
// Multiplies a B-word by s0 (top) or sn (bottom) on the given side.
std::vector<int> parity_correct(int n, const std::vector<int>& b_word, Side side);
Element parity_correct_element(int n, const Element& e, Side side);

// B-word -> reduced word over the C or D generators. Throws ParityViolation.
std::vector<int> regroup_to_cd(const System& target, const std::vector<int>& b_word);
std::vector<int> expand_to_b(const System& sys, const std::vector<int>& word);

struct SvgOptions {
  int column = 40;  // px per event
  int row = 30;     // px per slot
  int margin = 30;
  bool labels = true;
};
std::string render_svg(const Configuration& cfg, const SvgOptions& opt = {});

}  // namespace wngt
