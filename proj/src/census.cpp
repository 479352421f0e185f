#include "chordbracket/census.hpp"

#include <atomic>
#include <bit>
#include <sstream>
#include <thread>

#include "chordbracket/bracket.hpp"

namespace chordbracket {

struct DiagramEnumerator::Cursor {
  ChordDiagram diagram;
  std::vector<Chord> *chords;
  std::uint64_t used = 0; // bit l set when label l is taken
  int depth = 0;
};

DiagramEnumerator::DiagramEnumerator(int d, bool parity_only) : d_(d), parity_only_(parity_only) {
  if (d < 0 || d > 31)
    throw RangeError("chord count " + std::to_string(d) + " outside 0..31");
  for (int b = 2; b <= 2 * d; ++b) {
    if (parity_only_ && (1 + b) % 2 == 0)
      continue;
    first_choices_.push_back({1, b});
    first_choices_.push_back({b, 1});
  }
}

int DiagramEnumerator::part_count() const {
  return d_ == 0 ? 1 : static_cast<int>(first_choices_.size());
}

void DiagramEnumerator::for_each(const Visitor &visit) const {
  for (int part = 0; part < part_count(); ++part)
    for_each_in_part(part, visit);
}

void DiagramEnumerator::for_each_in_part(int part, const Visitor &visit) const {
  if (part < 0 || part >= part_count())
    throw RangeError("enumeration part " + std::to_string(part) + " out of range");
  Cursor cursor{ChordDiagram(ChordDiagram::Unchecked{}, std::vector<Chord>(d_)), nullptr};
  cursor.chords = &cursor.diagram.chords_;
  if (d_ == 0) {
    visit(cursor.diagram);
    return;
  }
  const Chord first = first_choices_[part];
  (*cursor.chords)[0] = first;
  cursor.used = (std::uint64_t{1} << first.first) | (std::uint64_t{1} << first.second);
  cursor.depth = 1;
  descend(cursor, visit);
}

void DiagramEnumerator::descend(Cursor &cursor, const Visitor &visit) const {
  if (cursor.depth == d_) {
    visit(cursor.diagram);
    return;
  }
  // Bit 0 is never a label; mark it used so the lowest free bit is a label.
  const int a = std::countr_zero(~(cursor.used | 1u));
  const int slot = cursor.depth;
  ++cursor.depth;
  for (int b = a + 1; b <= 2 * d_; ++b) {
    const std::uint64_t bit_b = std::uint64_t{1} << b;
    if (cursor.used & bit_b)
      continue;
    if (parity_only_ && (a + b) % 2 == 0)
      continue;
    const std::uint64_t saved = cursor.used;
    cursor.used |= (std::uint64_t{1} << a) | bit_b;
    (*cursor.chords)[slot] = {a, b};
    descend(cursor, visit);
    (*cursor.chords)[slot] = {b, a};
    descend(cursor, visit);
    cursor.used = saved;
  }
  --cursor.depth;
}

std::uint64_t DiagramEnumerator::expected_count() const {
  std::uint64_t n = 1;
  if (parity_only_) {
    for (int k = 1; k <= d_; ++k)
      n *= 2 * static_cast<std::uint64_t>(k);
    return n;
  }
  // (2d)!/d! = (d+1)(d+2)...(2d)
  for (int k = d_ + 1; k <= 2 * d_; ++k)
    n *= static_cast<std::uint64_t>(k);
  return n;
}

void enumerate_all(int d, const DiagramEnumerator::Visitor &visit) {
  if (d < 0 || d > kMaxFullEnumeration)
    throw RangeError("full enumeration supports 0 <= d <= " +
                     std::to_string(kMaxFullEnumeration) + ", got " + std::to_string(d));
  DiagramEnumerator(d, false).for_each(visit);
}

void enumerate_parity(int d, const DiagramEnumerator::Visitor &visit) {
  if (d < 1 || d > kMaxParityEnumeration)
    throw RangeError("parity enumeration supports 1 <= d <= " +
                     std::to_string(kMaxParityEnumeration) + ", got " + std::to_string(d));
  DiagramEnumerator(d, true).for_each(visit);
}

std::string to_string(CensusMode mode) { return mode == CensusMode::Full ? "full" : "pruned"; }

namespace {

unsigned resolve_threads(const CensusOptions &options) {
  if (options.threads > 0)
    return options.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs `work(part, result)` for every enumeration part and merges the per-part
// results in part order, so the outcome never depends on the thread count.
template <typename Result, typename Work, typename Merge>
Result fan_out(const DiagramEnumerator &gen, const CensusOptions &options, Work work,
               Merge merge) {
  const int parts = gen.part_count();
  std::vector<Result> partial(parts);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int part = next++; part < parts; part = next++)
      work(part, partial[part]);
  };

  const unsigned threads = std::min<unsigned>(resolve_threads(options), parts);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back(worker);
  }

  Result out{};
  for (auto &r : partial)
    merge(out, r);
  return out;
}

void require_census_range(int d) {
  if (d < 1 || d > kMaxFullEnumeration)
    throw RangeError("span census supports 1 <= d <= " + std::to_string(kMaxFullEnumeration) +
                     ", got " + std::to_string(d));
}

} // namespace

SpanCensus span_census(int d, const CensusOptions &options) {
  require_census_range(d);
  const DiagramEnumerator gen(d, false);
  SpanCensus census = fan_out<SpanCensus>(
      gen, options,
      [&](int part, SpanCensus &local) {
        gen.for_each_in_part(part, [&](const ChordDiagram &c) {
          ++local.total;
          if (auto span = bracket_span(c))
            ++local.counts[*span];
          else
            ++local.undefined;
        });
      },
      [](SpanCensus &out, const SpanCensus &part) {
        out.total += part.total;
        out.undefined += part.undefined;
        for (const auto &[span, n] : part.counts)
          out.counts[span] += n;
      });
  census.chord_count = d;
  census.mode = CensusMode::Full;
  return census;
}

std::vector<ChordDiagram> max_span_diagrams(int d, CensusMode mode, const CensusOptions &options) {
  const int cap = mode == CensusMode::Full ? kMaxFullMaxSpan : kMaxPrunedMaxSpan;
  if (d < 2 || d > cap)
    throw RangeError("maximal-span count in " + to_string(mode) + " mode supports 2 <= d <= " +
                     std::to_string(cap) + ", got " + std::to_string(d));

  const int target = 4 * d;
  const DiagramEnumerator gen(d, mode == CensusMode::Pruned);
  using Found = std::vector<ChordDiagram>;
  return fan_out<Found>(
      gen, options,
      [&](int part, Found &local) {
        gen.for_each_in_part(part, [&](const ChordDiagram &c) {
          if (mode == CensusMode::Pruned && mu_extremes(c).sum() != d + 2)
            return;
          if (bracket_span(c) == target)
            local.push_back(c);
        });
      },
      [](Found &out, Found &part) {
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
      });
}

std::uint64_t count_max_span(int d, CensusMode mode, const CensusOptions &options) {
  return max_span_diagrams(d, mode, options).size();
}

std::set<int> realizable_spans(int d, const CensusOptions &options) {
  std::set<int> spans;
  for (const auto &[span, n] : span_census(d, options).counts)
    if (n > 0)
      spans.insert(span);
  return spans;
}

std::string SpanCensus::to_json() const {
  std::ostringstream os;
  os << "{\"d\": " << chord_count << ", \"total\": " << total << ", \"counts\": {";
  bool first = true;
  for (const auto &[span, n] : counts) {
    os << (first ? "" : ", ") << '"' << span << "\": " << n;
    first = false;
  }
  if (undefined > 0)
    os << (first ? "" : ", ") << "\"undefined\": " << undefined;
  os << "}, \"mode\": \"" << chordbracket::to_string(mode) << "\"}";
  return os.str();
}

std::string SpanCensus::to_string() const {
  std::ostringstream os;
  os << "d=" << chord_count << " total=" << total << " mode=" << chordbracket::to_string(mode)
     << '\n';
  for (const auto &[span, n] : counts)
    os << "span " << span << ": " << n << '\n';
  if (undefined > 0)
    os << "span undefined: " << undefined << '\n';
  return os.str();
}

} // namespace chordbracket
