#include "glhecke/psi.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace glhecke {

namespace {

using Bounds = std::pair<std::int64_t, std::int64_t>;

int column_index(const PsiDiagram& d, std::int64_t value) {
  for (std::size_t c = 0; c < d.columns.size(); ++c) {
    if (d.columns[c].value == value) return static_cast<int>(c);
  }
  throw std::invalid_argument("no column for value " + std::to_string(value));
}

std::vector<int> fresh_entries(const PsiColumn& col) {
  std::vector<int> out;
  for (std::size_t r = 0; r < col.entries.size(); ++r) {
    if (col.entries[r].fresh) out.push_back(static_cast<int>(r));
  }
  return out;
}

// Columns strictly between the endpoints of a same-parity segment.
std::vector<int> flip_columns(const PsiDiagram& d, const Bounds& seg) {
  std::vector<int> out;
  if ((seg.second - seg.first) % 2 != 0) return out;
  for (std::int64_t v = seg.second - 1; v > seg.first; --v) out.push_back(column_index(d, v));
  return out;
}

void join(PsiDiagram& d, int col_top, int row_top, int col_bottom, int row_bottom) {
  for (auto [c, r] : {std::pair{col_top, row_top}, std::pair{col_bottom, row_bottom}}) {
    auto& e = d.columns[c].entries[r];
    e.arc = d.arcs;
    e.fresh = false;
  }
  ++d.arcs;
}

void flip(PsiDiagram& d, int col, int row) {
  auto& e = d.columns[col].entries[row];
  e.sign = -e.sign;
  e.fresh = false;
}

[[noreturn]] void exhausted(const PsiDiagram& d, int col) {
  throw std::runtime_error("column " + std::to_string(d.columns[col].value) + " has no fresh entry left");
}

std::vector<Bounds> checked_segments(const Multisegment& tau, const IntegralWeight& lambda) {
  if (tau.support() != lambda.as_scalars()) {
    throw std::invalid_argument("support of " + tau.str() + " differs from lambda " + lambda.str());
  }
  std::vector<Bounds> segs;
  for (const auto& s : tau.segments()) segs.push_back(integral_bounds(s));
  return segs;
}

// Decreasing length; ties keep their given order.
std::vector<Bounds> processing_order(std::vector<Bounds> segs) {
  std::stable_sort(segs.begin(), segs.end(), [](const Bounds& a, const Bounds& b) {
    return a.second - a.first > b.second - b.first;
  });
  return segs;
}

// Every distinct ordering that is weakly decreasing in length.
void for_each_tie_order(std::vector<Bounds> segs, const std::function<void(const std::vector<Bounds>&)>& fn) {
  std::sort(segs.begin(), segs.end(), [](const Bounds& a, const Bounds& b) {
    const auto la = a.second - a.first;
    const auto lb = b.second - b.first;
    return la != lb ? la > lb : a < b;
  });
  std::vector<std::size_t> group_start;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (i == 0 || segs[i].second - segs[i].first != segs[i - 1].second - segs[i - 1].first) group_start.push_back(i);
  }
  group_start.push_back(segs.size());
  std::function<void(std::size_t)> rec = [&](std::size_t g) {
    if (g + 1 == group_start.size()) {
      fn(segs);
      return;
    }
    const auto first = segs.begin() + static_cast<std::ptrdiff_t>(group_start[g]);
    const auto last = segs.begin() + static_cast<std::ptrdiff_t>(group_start[g + 1]);
    do {
      rec(g + 1);
    } while (std::next_permutation(first, last));
  };
  rec(0);
}

// Every fresh-entry choice for the remaining segments; fn sees final diagrams.
void for_each_choice(const PsiDiagram& d, const std::vector<Bounds>& segs, std::size_t idx,
                     const std::function<void(const PsiDiagram&)>& fn) {
  if (idx == segs.size()) {
    fn(d);
    return;
  }
  const auto& seg = segs[idx];
  if (seg.first == seg.second) {
    for_each_choice(d, segs, idx + 1, fn);
    return;
  }
  const int top = column_index(d, seg.second);
  const int bottom = column_index(d, seg.first);
  const auto flips = flip_columns(d, seg);
  const auto top_rows = fresh_entries(d.columns[top]);
  const auto bottom_rows = fresh_entries(d.columns[bottom]);
  if (top_rows.empty()) exhausted(d, top);
  if (bottom_rows.empty()) exhausted(d, bottom);
  for (int rt : top_rows) {
    for (int rb : bottom_rows) {
      PsiDiagram joined = d;
      join(joined, top, rt, bottom, rb);
      std::function<void(PsiDiagram&, std::size_t)> flip_rec = [&](PsiDiagram& cur, std::size_t f) {
        if (f == flips.size()) {
          for_each_choice(cur, segs, idx + 1, fn);
          return;
        }
        const auto rows = fresh_entries(cur.columns[flips[f]]);
        if (rows.empty()) exhausted(cur, flips[f]);
        for (int r : rows) {
          PsiDiagram next = cur;
          flip(next, flips[f], r);
          flip_rec(next, f + 1);
        }
      };
      flip_rec(joined, 0);
    }
  }
}

void for_each_flattening(const PsiDiagram& d, const std::function<void(const SignedInvolution&)>& fn) {
  std::vector<std::vector<int>> order(d.columns.size());
  for (std::size_t c = 0; c < d.columns.size(); ++c) {
    for (std::size_t r = 0; r < d.columns[c].entries.size(); ++r) order[c].push_back(static_cast<int>(r));
  }
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == order.size()) {
      fn(flatten(d, order));
      return;
    }
    std::sort(order[c].begin(), order[c].end());
    do {
      rec(c + 1);
    } while (std::next_permutation(order[c].begin(), order[c].end()));
  };
  rec(0);
}

std::set<SignedInvolution> all_outputs(const Multisegment& tau, const IntegralWeight& lambda, std::int64_t* variants) {
  const auto segs = checked_segments(tau, lambda);
  const PsiDiagram start = initial_diagram(lambda);
  std::set<SignedInvolution> out;
  // Distinct final diagrams, so flattenings are only expanded once per diagram.
  std::set<std::string> seen;
  for_each_tie_order(segs, [&](const std::vector<Bounds>& order) {
    for_each_choice(start, order, 0, [&](const PsiDiagram& final_diagram) {
      if (!seen.insert(final_diagram.render()).second) return;
      for_each_flattening(final_diagram, [&](const SignedInvolution& s) {
        if (variants) ++*variants;
        out.insert(s);
      });
    });
  });
  return out;
}

}  // namespace

std::string PsiDiagram::render() const {
  std::size_t width = 1;
  for (const auto& col : columns) width = std::max(width, std::to_string(col.value).size());
  std::size_t rows = 0;
  for (const auto& col : columns) rows = std::max(rows, col.entries.size());
  auto cell = [width](const std::string& s) { return std::string(width - std::min(width, s.size()), ' ') + s; };
  auto emit_line = [](std::string line) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    return line + "\n";
  };
  std::string out;
  std::string header;
  for (std::size_t c = 0; c < columns.size(); ++c) header += (c ? "  " : "") + cell(std::to_string(columns[c].value));
  out += emit_line(header);
  for (std::size_t r = 0; r < rows; ++r) {
    std::string line;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      std::string token;
      if (r < columns[c].entries.size()) {
        const auto& e = columns[c].entries[r];
        token = e.arc >= 0 ? arc_label(e.arc) : (e.sign > 0 ? "+" : "-");
      }
      line += (c ? "  " : "") + cell(token);
    }
    out += emit_line(line);
  }
  return out;
}

PsiDiagram initial_diagram(const IntegralWeight& lambda) {
  PsiDiagram d;
  for (const auto& [value, mult] : lambda.columns()) {
    PsiColumn col;
    col.value = value;
    const int sign = value % 2 == 0 ? 1 : -1;
    col.entries.assign(mult, PsiEntry{sign, -1, true});
    d.columns.push_back(std::move(col));
  }
  return d;
}

std::pair<std::int64_t, std::int64_t> integral_bounds(const Segment& seg) {
  if (!seg.start().is_integer()) throw std::invalid_argument("segment " + seg.str() + " is not integral");
  const auto from = seg.start().re().to_integer();
  return {from, from + seg.len() - 1};
}

SignedInvolution flatten(const PsiDiagram& d) {
  std::vector<std::vector<int>> order(d.columns.size());
  for (std::size_t c = 0; c < d.columns.size(); ++c) {
    for (std::size_t r = 0; r < d.columns[c].entries.size(); ++r) order[c].push_back(static_cast<int>(r));
  }
  return flatten(d, order);
}

SignedInvolution flatten(const PsiDiagram& d, const std::vector<std::vector<int>>& order) {
  if (order.size() != d.columns.size()) throw std::invalid_argument("one order per column required");
  std::vector<int> signs;
  std::map<int, std::vector<int>> arc_ends;
  for (std::size_t c = 0; c < d.columns.size(); ++c) {
    const auto& col = d.columns[c];
    if (order[c].size() != col.entries.size()) throw std::invalid_argument("column order has the wrong length");
    for (int r : order[c]) {
      const auto& e = col.entries.at(r);
      if (e.arc >= 0) arc_ends[e.arc].push_back(static_cast<int>(signs.size()));
      signs.push_back(e.sign);
    }
  }
  std::vector<std::pair<int, int>> arcs;
  for (const auto& [id, ends] : arc_ends) {
    if (ends.size() != 2) throw std::logic_error("arc without two endpoints");
    arcs.emplace_back(ends[0], ends[1]);
  }
  return SignedInvolution::from_arcs(static_cast<int>(signs.size()), arcs, signs);
}

PsiTrace psi_g_trace(const Multisegment& tau, const IntegralWeight& lambda) {
  const auto segs = processing_order(checked_segments(tau, lambda));
  PsiTrace trace;
  PsiDiagram d = initial_diagram(lambda);
  trace.stages.push_back(d);
  for (const auto& seg : segs) {
    if (seg.first == seg.second) continue;
    const int top = column_index(d, seg.second);
    const int bottom = column_index(d, seg.first);
    const auto top_rows = fresh_entries(d.columns[top]);
    const auto bottom_rows = fresh_entries(d.columns[bottom]);
    if (top_rows.empty()) exhausted(d, top);
    if (bottom_rows.empty()) exhausted(d, bottom);
    join(d, top, top_rows.front(), bottom, bottom_rows.front());
    for (int c : flip_columns(d, seg)) {
      const auto rows = fresh_entries(d.columns[c]);
      if (rows.empty()) exhausted(d, c);
      flip(d, c, rows.front());
    }
    trace.stages.push_back(d);
  }
  trace.flattened = flatten(d);
  return trace;
}

OrbitClass psi_g(const Multisegment& tau, const IntegralWeight& lambda) {
  return orbit_class(psi_g_trace(tau, lambda).flattened, BlockStructure::from_weight(lambda));
}

std::vector<SignedInvolution> psi_g_all_outputs(const Multisegment& tau, const IntegralWeight& lambda) {
  const auto out = all_outputs(tau, lambda, nullptr);
  return {out.begin(), out.end()};
}

PsiWellPosedReport verify_psi_wellposed(const IntegralWeight& lambda) {
  PsiWellPosedReport report;
  report.lambda = lambda;
  const auto bs = BlockStructure::from_weight(lambda);
  for (const auto& hp : enumerate_multisegments(lambda)) {
    ++report.multisegments;
    try {
      const auto reference = psi_g(hp.multisegment(), lambda);
      for (const auto& s : all_outputs(hp.multisegment(), lambda, &report.variants)) {
        if (!reference.contains(s)) {
          report.violations.push_back(hp.str() + ": " + s.str() + " is outside the class of " +
                                      reference.canonical().str());
        }
      }
    } catch (const std::runtime_error& e) {
      report.violations.push_back(hp.str() + ": " + e.what());
    }
  }
  return report;
}

PsiInjectivityReport verify_injectivity(const IntegralWeight& lambda) {
  PsiInjectivityReport report;
  report.lambda = lambda;
  std::map<SignedInvolution, HeckeParam> seen;
  for (const auto& hp : enumerate_multisegments(lambda)) {
    ++report.multisegments;
    const auto cls = psi_g(hp.multisegment(), lambda);
    auto [it, inserted] = seen.emplace(cls.canonical(), hp);
    if (!inserted) report.collisions.emplace_back(it->second, hp);
  }
  report.classes = static_cast<int>(seen.size());
  return report;
}

}  // namespace glhecke
