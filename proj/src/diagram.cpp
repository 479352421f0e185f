#include "chordbracket/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "json.hpp"

namespace chordbracket {

namespace {

std::string pair_text(const Chord &c) {
  return "(" + std::to_string(c.first) + "," + std::to_string(c.second) + ")";
}

void canonicalize(std::vector<Chord> &chords) {
  std::sort(chords.begin(), chords.end(),
            [](const Chord &a, const Chord &b) { return a.lo() < b.lo(); });
}

void validate(const std::vector<Chord> &chords) {
  const int labels = 2 * static_cast<int>(chords.size());
  std::vector<char> seen(labels + 1, 0);
  for (const Chord &c : chords) {
    if (c.first == c.second)
      throw DiagramError(DiagramError::Kind::SelfPairedChord,
                         "chord " + pair_text(c) + " pairs a label with itself", c);
    for (int label : {c.first, c.second}) {
      if (label < 1 || label > labels)
        throw DiagramError(DiagramError::Kind::LabelOutOfRange,
                           "label " + std::to_string(label) + " in chord " + pair_text(c) +
                               " is outside 1.." + std::to_string(labels),
                           c);
      if (seen[label])
        throw DiagramError(DiagramError::Kind::DuplicateLabel,
                           "label " + std::to_string(label) + " in chord " + pair_text(c) +
                               " is used twice",
                           c);
      seen[label] = 1;
    }
  }
}

} // namespace

DiagramError::DiagramError(Kind kind, std::string message, Chord offending)
    : std::invalid_argument(std::move(message)), kind_(kind), offending_(offending) {}

ChordDiagram::ChordDiagram(std::vector<Chord> chords) : chords_(std::move(chords)) {
  validate(chords_);
  canonicalize(chords_);
}

int ChordDiagram::writhe() const {
  int w = 0;
  for (const Chord &c : chords_)
    w += c.positive() ? 1 : -1;
  return w;
}

bool ChordDiagram::parity_condition() const {
  return std::all_of(chords_.begin(), chords_.end(),
                     [](const Chord &c) { return (c.first + c.second) % 2 != 0; });
}

std::string ChordDiagram::to_string() const {
  if (chords_.empty())
    return "empty";
  std::string out;
  for (const Chord &c : chords_)
    out += pair_text(c);
  return out;
}

std::string ChordDiagram::to_json() const {
  std::string out = "{\"chords\": [";
  for (std::size_t k = 0; k < chords_.size(); ++k) {
    if (k)
      out += ',';
    out += '[' + std::to_string(chords_[k].first) + ',' + std::to_string(chords_[k].second) + ']';
  }
  out += "]}";
  return out;
}

ChordDiagram stack(const ChordDiagram &c, const ChordDiagram &d) {
  const int shift = 2 * c.size();
  std::vector<Chord> chords(c.chords().begin(), c.chords().end());
  for (const Chord &x : d.chords())
    chords.push_back({x.first + shift, x.second + shift});
  return ChordDiagram(std::move(chords));
}

ChordDiagram reverse(const ChordDiagram &c) {
  std::vector<Chord> chords;
  chords.reserve(c.size());
  for (const Chord &x : c.chords())
    chords.push_back(x.reversed());
  return ChordDiagram(std::move(chords));
}

ChordDiagram insert_monogon(const ChordDiagram &c, int ell, bool positive) {
  if (ell < 0 || ell > 2 * c.size())
    throw std::out_of_range("monogon position " + std::to_string(ell) + " outside 0.." +
                            std::to_string(2 * c.size()));
  auto shift = [ell](int label) { return label > ell ? label + 2 : label; };
  std::vector<Chord> chords;
  chords.reserve(c.size() + 1);
  for (const Chord &x : c.chords())
    chords.push_back({shift(x.first), shift(x.second)});
  chords.push_back(positive ? Chord{ell + 1, ell + 2} : Chord{ell + 2, ell + 1});
  return ChordDiagram(std::move(chords));
}

ChordDiagram insert_monogon_wrap(const ChordDiagram &c, bool positive) {
  const int outer = 2 * c.size() + 2;
  std::vector<Chord> chords;
  chords.reserve(c.size() + 1);
  for (const Chord &x : c.chords())
    chords.push_back({x.first + 1, x.second + 1});
  chords.push_back(positive ? Chord{1, outer} : Chord{outer, 1});
  return ChordDiagram(std::move(chords));
}

ChordDiagram parse_pairs(const std::string &text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)))
      s.push_back(ch);
  if (s == "empty")
    return {};

  auto malformed = [&](const std::string &why) {
    return DiagramError(DiagramError::Kind::Malformed,
                        "cannot parse diagram '" + text + "': " + why);
  };
  auto read_int = [&](std::size_t &pos) {
    std::size_t start = pos;
    if (pos < s.size() && s[pos] == '-')
      ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start || (pos == start + 1 && s[start] == '-'))
      throw malformed("expected an integer at offset " + std::to_string(start));
    try {
      return std::stoi(s.substr(start, pos - start));
    } catch (const std::out_of_range &) {
      throw malformed("label out of range");
    }
  };

  std::vector<Chord> chords;
  std::size_t pos = 0;
  if (s.empty())
    throw malformed("no chords (use 'empty' for the empty diagram)");
  while (pos < s.size()) {
    if (!chords.empty() && s[pos] == ',')
      ++pos;
    if (pos >= s.size() || s[pos] != '(')
      throw malformed("expected '('");
    ++pos;
    Chord c;
    c.first = read_int(pos);
    if (pos >= s.size() || s[pos] != ',')
      throw malformed("expected ','");
    ++pos;
    c.second = read_int(pos);
    if (pos >= s.size() || s[pos] != ')')
      throw malformed("expected ')'");
    ++pos;
    chords.push_back(c);
  }
  return ChordDiagram(std::move(chords));
}

ChordDiagram parse_json(const std::string &text) {
  auto malformed = [&](const std::string &why) {
    return DiagramError(DiagramError::Kind::Malformed, "invalid diagram JSON: " + why);
  };
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw malformed(e.what());
  }
  if (!doc.is_object() || !doc.contains("chords") || !doc["chords"].is_array())
    throw malformed("expected an object with a \"chords\" array");
  std::vector<Chord> chords;
  for (const auto &pair : doc["chords"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer())
      throw malformed("each chord must be a two-element integer array");
    chords.push_back({pair[0].get<int>(), pair[1].get<int>()});
  }
  return ChordDiagram(std::move(chords));
}

ChordDiagram parse_gauss(const std::string &word) {
  struct Occurrences {
    std::vector<int> positions;
    int signed_count = 0;
    bool positive = true;
  };
  std::map<std::string, Occurrences> labels;
  std::istringstream in(word);
  std::string token;
  int position = 0;
  while (in >> token) {
    ++position;
    char sign = 0;
    if (token[0] == '+' || token[0] == '-') {
      sign = token[0];
      token.erase(0, 1);
    }
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](char ch) {
          return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
        }))
      throw DiagramError(DiagramError::Kind::Malformed,
                         "bad Gauss token at position " + std::to_string(position));
    auto &occ = labels[token];
    occ.positions.push_back(position);
    if (sign) {
      ++occ.signed_count;
      occ.positive = sign == '+';
    }
  }

  std::vector<Chord> chords;
  for (const auto &[label, occ] : labels) {
    if (occ.positions.size() != 2)
      throw DiagramError(DiagramError::Kind::Malformed,
                         "Gauss label '" + label + "' appears " +
                             std::to_string(occ.positions.size()) + " times, expected 2");
    if (occ.signed_count != 1)
      throw DiagramError(DiagramError::Kind::Malformed,
                         "Gauss label '" + label + "' must carry exactly one sign, found " +
                             std::to_string(occ.signed_count));
    const int u = occ.positions[0], v = occ.positions[1];
    chords.push_back(occ.positive ? Chord{u, v} : Chord{v, u});
  }
  return ChordDiagram(std::move(chords));
}

} // namespace chordbracket
