#include "acq/contour_strategy.hpp"

#include <algorithm>
#include <string>

#include "acq/bounds.hpp"
#include "acq/error.hpp"
#include "acq/path_strategy.hpp"

namespace acq {

namespace {

SwapJob make_job(const Contour& contour, std::size_t k) {
  SwapJob job;
  job.virtual_index = k;
  job.gamma_begin = contour.marks[k];
  job.gamma_end = contour.marks[k + 1];
  const auto& pos = contour.positions;
  for (std::size_t p = job.gamma_begin; p < job.gamma_end; ++p) {
    job.steps.emplace_back(pos[p], pos[p + 1]);
  }
  for (std::size_t p = job.gamma_end - 1; p > job.gamma_begin; --p) {
    job.steps.emplace_back(pos[p], pos[p - 1]);
  }
  job.footprint.assign(pos.begin() + static_cast<std::ptrdiff_t>(job.gamma_begin),
                       pos.begin() + static_cast<std::ptrdiff_t>(job.gamma_end) + 1);
  std::sort(job.footprint.begin(), job.footprint.end());
  job.footprint.erase(std::unique(job.footprint.begin(), job.footprint.end()),
                      job.footprint.end());
  return job;
}

}  // namespace

std::vector<SwapJob> jobs_for_round(const Contour& contour, std::size_t round) {
  std::vector<SwapJob> jobs;
  const std::size_t n = contour.marks.size();
  for (std::size_t k = (round + 1) % 2; k + 1 < n; k += 2) {
    jobs.push_back(make_job(contour, k));
  }
  return jobs;
}

std::vector<SwapJob> conflict_color(std::vector<SwapJob> jobs, std::size_t max_degree) {
  std::sort(jobs.begin(), jobs.end(),
            [](const SwapJob& a, const SwapJob& b) { return a.virtual_index < b.virtual_index; });
  const std::size_t palette = 4 * max_degree;
  Vertex top = 0;
  for (const SwapJob& job : jobs) {
    for (Vertex v : job.footprint) top = std::max(top, v);
  }
  // Colors already taken by earlier jobs touching each vertex.
  std::vector<std::vector<std::size_t>> colors_at(jobs.empty() ? 0 : top + 1);
  std::vector<std::size_t> blocked;
  for (SwapJob& job : jobs) {
    blocked.clear();
    for (Vertex v : job.footprint) {
      blocked.insert(blocked.end(), colors_at[v].begin(), colors_at[v].end());
    }
    std::sort(blocked.begin(), blocked.end());
    std::size_t color = 0;
    for (std::size_t c : blocked) {
      if (c == color) ++color;
      else if (c > color) break;
    }
    if (color >= palette) {
      throw Error(ErrorKind::ColorOverflow,
                  "job " + std::to_string(job.virtual_index) + " needs color " +
                      std::to_string(color) + " but only " + std::to_string(palette) +
                      " are available");
    }
    job.color = color;
    for (Vertex v : job.footprint) colors_at[v].push_back(color);
  }
  return jobs;
}

SynthesisReport synthesize(const Graph& g, const SynthesisOptions& options) {
  const std::size_t n = g.size();
  if (n == 0) throw Error(ErrorKind::TooSmall, "synthesis needs at least one vertex");

  SynthesisReport report;
  report.tree = spanning_tree(g, options.root, options.policy);
  report.tree_max_degree = report.tree.max_degree();
  report.graph_max_degree = max_degree(g);
  report.bound = contour_bound(n, report.tree_max_degree);
  report.graph_bound = contour_bound(n, report.graph_max_degree);

  const Contour contour = marked_contour(report.tree);
  const std::size_t virtual_rounds =
      options.path_rounds == PathRounds::Full ? n : (n >= 2 ? n - 2 : 0);

  auto& rounds = report.strategy.rounds;
  for (std::size_t r = 1; r <= virtual_rounds; ++r) {
    const auto jobs = conflict_color(jobs_for_round(contour, r), report.tree_max_degree);
    std::size_t colors = 0;
    for (const SwapJob& job : jobs) colors = std::max(colors, job.color + 1);
    report.max_colors = std::max(report.max_colors, colors);

    const std::size_t first = rounds.size();
    rounds.resize(first + colors * kSubRoundsPerColor);
    for (const SwapJob& job : jobs) {
      const std::size_t base = first + job.color * kSubRoundsPerColor;
      for (std::size_t s = 0; s < job.steps.size(); ++s) rounds[base + s].push_back(job.steps[s]);
    }
  }
  while (!rounds.empty() && rounds.back().empty()) rounds.pop_back();
  for (Matching& m : rounds) std::sort(m.begin(), m.end());

  report.strategy.graph = g;
  report.rounds_used = rounds.size();
  report.verification = run(g, report.strategy);
  report.completion_round = report.verification.completion_round;
  return report;
}

}  // namespace acq
