#include <map>

#include "clawpath/reductions.hpp"

namespace clawpath {

namespace {

// Guesses the solution around every terminal. A segment between consecutive
// terminals is either short (at most 2w edges, guessed whole) or long, in
// which case only its first and last w interior vertices are guessed. Every
// guessed vertex may touch only its path neighbours among guessed vertices;
// the one exception is the first vertex of a closing piece, which may touch
// the end of the previous piece (empty middle).
class Guesser {
 public:
  Guesser(const Instance& inst, const SimplifyOptions& opts)
      : inst_(inst), g_(inst.graph), ts_(inst.terminals), w_(opts.window), meter_(opts.budget),
        placed_(g_.capacity()), terms_(VertexSet::of(g_.capacity(), ts_)) {}

  Simplification run() {
    place_new_piece(ts_.front());
    segment(0, 0);
    return std::move(out_);
  }

 private:
  VertexId last() const { return pieces_.back().back(); }

  void place(VertexId v) {
    pieces_.back().push_back(v);
    placed_.insert(v);
  }
  void unplace() {
    placed_.erase(pieces_.back().back());
    pieces_.back().pop_back();
  }
  void place_new_piece(VertexId v) {
    pieces_.emplace_back();
    place(v);
  }
  void unplace_piece() {
    unplace();
    pieces_.pop_back();
  }

  // Guessed neighbours of x are exactly {via} (or a subset of it when `loose`).
  bool attaches(VertexId x, VertexId via, bool loose) const {
    VertexSet touch = g_.neighbors(x) & placed_;
    if (loose) return touch.empty() || (touch.size() == 1 && touch.contains(via));
    return touch.size() == 1 && touch.contains(via);
  }
  // x is not adjacent to any terminal after the next one.
  bool clear_of_future(VertexId x, std::size_t i) const {
    for (std::size_t m = i + 2; m < ts_.size(); ++m)
      if (g_.adjacent(x, ts_[m])) return false;
    return true;
  }

  // Heading from ts_[i] to ts_[i+1]; c interior vertices guessed so far.
  bool segment(std::size_t i, std::size_t c) {
    meter_.tick();
    VertexId v = last(), next = ts_[i + 1];
    if (g_.adjacent(v, next)) return arrive(i);
    if (c + 1 < 2 * w_) {
      for (VertexId x : g_.neighbors(v) - placed_) {
        if (terms_.contains(x) || !attaches(x, v, false) || !clear_of_future(x, i)) continue;
        place(x);
        bool stop = segment(i, c + 1);
        unplace();
        if (stop) return true;
      }
    }
    if (c == w_) {
      VertexId e = v;
      for (VertexId x : g_.vertex_set() - placed_) {
        if (terms_.contains(x) || g_.adjacent(x, next) || !attaches(x, e, true) || !clear_of_future(x, i)) continue;
        place_new_piece(x);
        bool stop = tail(i, 1);
        unplace_piece();
        if (stop) return true;
      }
    }
    return false;
  }

  // Closing piece of a long segment with j of its w vertices placed.
  bool tail(std::size_t i, std::size_t j) {
    meter_.tick();
    VertexId v = last(), next = ts_[i + 1];
    if (j == w_) return g_.adjacent(v, next) ? arrive(i) : false;
    for (VertexId x : g_.neighbors(v) - placed_) {
      if (terms_.contains(x) || !attaches(x, v, false) || !clear_of_future(x, i)) continue;
      if (g_.adjacent(x, next) != (j + 1 == w_)) continue;
      place(x);
      bool stop = tail(i, j + 1);
      unplace();
      if (stop) return true;
    }
    return false;
  }

  bool arrive(std::size_t i) {
    VertexId next = ts_[i + 1];
    if (!attaches(next, last(), false)) return false;
    place(next);
    bool stop = i + 2 == ts_.size() ? record() : segment(i + 1, 0);
    unplace();
    return stop;
  }

  bool record() {
    if (pieces_.size() == 1) {
      out_.short_solution = PathCertificate{pieces_.front(), true};
      return true;
    }
    VertexSet ends(g_.capacity());
    for (std::size_t p = 0; p < pieces_.size(); ++p) {
      if (p > 0) ends.insert(pieces_[p].front());
      if (p + 1 < pieces_.size()) ends.insert(pieces_[p].back());
    }
    VertexSet drop(g_.capacity());
    for (VertexId x : placed_ - ends) drop |= g_.neighbors(x);
    drop -= placed_;
    // A solution extending the guess avoids `drop` and is connected, so every
    // guessed vertex must be in the component of t_1.
    VertexSet comp = g_.component_of(ts_.front(), g_.vertex_set() - drop);
    if (!(placed_ - comp).empty()) {
      ++out_.discarded;
      return false;
    }

    std::vector<VertexId> nt;
    for (std::size_t p = 0; p < pieces_.size(); ++p) {
      const auto& piece = pieces_[p];
      if (p == 0) {
        nt.push_back(piece.front());
        continue;
      }
      if (p + 1 == pieces_.size()) {
        nt.push_back(piece.back());
        continue;
      }
      std::vector<std::size_t> at;
      for (std::size_t q = 0; q < piece.size(); ++q)
        if (terms_.contains(piece[q])) at.push_back(q);
      if (at.size() == 1) {
        nt.push_back(piece[at.front()]);
      } else if (at.back() - at.front() >= 4) {
        nt.push_back(piece[at.front()]);
        nt.push_back(piece[at.back()]);
      } else {
        // Interior terminals are dropped; two new ones pin the direction.
        nt.push_back(piece[1]);
        nt.push_back(piece[piece.size() - 2]);
      }
    }

    Instance branch{g_.induced(comp), nt, Variant::OrderedPath};
    if (auto why = simplicity_violation(branch); !why.empty())
      throw std::logic_error("guessed branch is not simple: " + why);
    auto key = std::make_pair(comp.to_vector(), nt);
    if (!seen_.emplace(key, true).second) return false;

    ReductionTrace trace{inst_, {}};
    TraceStep s;
    s.kind = StepKind::Simplify;
    s.removed = (g_.vertex_set() - comp).to_vector();
    s.terminals = nt;
    s.note = std::to_string(pieces_.size()) + " pieces";
    trace.steps.push_back(std::move(s));
    out_.branches.push_back({std::move(branch), std::move(trace)});
    return false;
  }

  const Instance& inst_;
  const Graph& g_;
  const std::vector<VertexId>& ts_;
  std::size_t w_;
  SearchMeter meter_;
  VertexSet placed_;
  VertexSet terms_;
  std::vector<std::vector<VertexId>> pieces_;
  std::map<std::pair<std::vector<VertexId>, std::vector<VertexId>>, bool> seen_;
  Simplification out_;
};

}  // namespace

Simplification make_simple_instances(const Instance& inst, const SimplifyOptions& opts) {
  if (inst.variant != Variant::OrderedPath) throw PreconditionError("simple-instance branching needs an ordered-path instance");
  if (inst.terminals.size() < 2) throw PreconditionError("simple-instance branching needs k >= 2");
  if (opts.window < 3) throw InputError("guess window must be at least 3");
  inst.validate();
  Guesser guesser(inst, opts);
  return guesser.run();
}

}  // namespace clawpath
