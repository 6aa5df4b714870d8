// Copyright 2026 The Lipogram Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Constraint sweeps: translate one paragraph set under many constraint sets,
// record fidelity against exclusion fraction and fit the decay.

#ifndef LIPOGRAM_SWEEP_HPP_
#define LIPOGRAM_SWEEP_HPP_

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <istream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lipogram/error.hpp"
#include "lipogram/lexicon.hpp"
#include "lipogram/metrics.hpp"
#include "lipogram/pipeline.hpp"
#include "lipogram/text.hpp"

namespace lipogram {

struct SweepPoint {
  std::string label;
  std::string letters;
  double exclusion_fraction = 0.0;
  double mean_similarity = 0.0;
  double mean_e_score = 0.0;
  double mean_oov = 0.0;
  double mean_grammar_count = 0.0;
  std::size_t n_paragraphs = 0;

  friend bool operator==(const SweepPoint&, const SweepPoint&) = default;
};

// The 26 single letters, then {a,e,i,o,u}, then `extra` minus duplicates.
inline std::vector<ConstraintSet> default_constraint_sets(
    const std::vector<ConstraintSet>& extra = {}) {
  std::vector<ConstraintSet> sets;
  for (char c = 'a'; c <= 'z'; ++c) sets.push_back(ConstraintSet::single(c));
  sets.push_back(ConstraintSet::parse("aeiou"));
  for (const auto& s : extra) {
    if (std::find(sets.begin(), sets.end(), s) == sets.end()) sets.push_back(s);
  }
  return sets;
}

struct SweepInputs {
  const std::vector<std::string>* paragraphs = nullptr;
  const FreqTable* frequencies = nullptr;
  const Dictionary* dictionary = nullptr;
  const Embedder* evaluator = nullptr;
};

// One point per constraint set, in input order. An empty vocabulary or a
// failed decode scores as an empty paragraph rather than aborting the sweep.
inline std::vector<SweepPoint> run_sweep(const std::vector<ConstraintSet>& sets,
                                         const SweepInputs& in, TranslationOptions options,
                                         const PipelineResources& res) {
  if (sets.empty()) throw InputError("sweep needs at least one constraint set");
  if (in.paragraphs == nullptr || in.frequencies == nullptr || in.dictionary == nullptr ||
      in.evaluator == nullptr) {
    throw InputError("sweep inputs are incomplete");
  }
  options.tolerate_decode_failure = true;
  OfflineGrammarProvider offline;
  GrammarProvider& grammar = res.grammar != nullptr ? *res.grammar : offline;
  std::vector<SweepPoint> points;
  for (const auto& c : sets) {
    const TranslationResult out = translate_document(*in.paragraphs, c, options, res);
    const EvaluationReport report =
        evaluate_document(*in.paragraphs, out.paragraphs, c, *in.dictionary, grammar, *in.evaluator);
    SweepPoint p;
    p.label = c.label();
    p.letters = c.letters();
    p.exclusion_fraction = exclusion_fraction(c, *in.frequencies);
    p.n_paragraphs = in.paragraphs->size();
    if (report.aggregates) {
      p.mean_similarity = report.aggregates->similarity;
      p.mean_e_score = report.aggregates->e_score;
      p.mean_oov = report.aggregates->oov;
      p.mean_grammar_count = report.aggregates->grammar_count;
    }
    points.push_back(std::move(p));
  }
  return points;
}

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

// y = a * exp(-b * x)
struct ExponentialFit {
  double a = 0.0;
  double b = 0.0;
  double r2 = 0.0;
};

struct FitParams {
  LinearFit linear;
  std::optional<ExponentialFit> exponential;  // absent when no y > 0
};

namespace detail {

inline std::pair<double, double> least_squares(const std::vector<double>& x,
                                               const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  const double slope = sxx == 0.0 ? 0.0 : sxy / sxx;
  return {slope, my - slope * mx};
}

// Coefficient of determination of `predict` on (x, y), clamped to [0, 1].
template <typename Fn>
double r_squared(const std::vector<double>& x, const std::vector<double>& y, Fn predict) {
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(y.size());
  double ss_res = 0.0, ss_tot = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double e = y[i] - predict(x[i]);
    ss_res += e * e;
    ss_tot += (y[i] - my) * (y[i] - my);
  }
  if (ss_tot == 0.0) return ss_res == 0.0 ? 1.0 : 0.0;
  return std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0);
}

inline std::size_t distinct_count(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
}

}  // namespace detail

// Ordinary least squares on (x, y) and on (x, ln y) for y > 0. Both r2 are
// measured on y itself. Needs at least three distinct x.
inline FitParams fit_decay(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw InputError("fit_decay: x and y differ in length");
  if (detail::distinct_count(x) < 3) {
    throw InputError("fit_decay needs at least 3 points with distinct exclusion fractions");
  }
  FitParams fit;
  const auto [slope, intercept] = detail::least_squares(x, y);
  fit.linear = {slope, intercept, 0.0};
  fit.linear.r2 = detail::r_squared(x, y, [&](double v) { return intercept + slope * v; });

  std::vector<double> px, ly;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (y[i] > 0.0) {
      px.push_back(x[i]);
      ly.push_back(std::log(y[i]));
    }
  }
  if (px.size() >= 2 && detail::distinct_count(px) >= 2) {
    const auto [ls, li] = detail::least_squares(px, ly);
    ExponentialFit e{std::exp(li), -ls, 0.0};
    e.r2 = detail::r_squared(x, y, [&](double v) { return e.a * std::exp(-e.b * v); });
    fit.exponential = e;
  }
  return fit;
}

inline FitParams fit_decay(const std::vector<SweepPoint>& points) {
  std::vector<double> x, y;
  for (const auto& p : points) {
    x.push_back(p.exclusion_fraction);
    y.push_back(p.mean_similarity);
  }
  return fit_decay(x, y);
}

// 1-based ranks, ties share their average rank.
inline std::vector<double> average_ranks(const std::vector<double>& v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(v.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

// Pearson correlation of average ranks; 0 when either side is constant.
inline double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw InputError("spearman needs two equally long series of at least 2 values");
  }
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

inline double spearman(const std::vector<SweepPoint>& points) {
  std::vector<double> x, y;
  for (const auto& p : points) {
    x.push_back(p.exclusion_fraction);
    y.push_back(p.mean_similarity);
  }
  return spearman(x, y);
}

inline constexpr std::string_view kSweepCsvHeader =
    "label,letters,exclusion_fraction,mean_similarity,mean_e_score,mean_oov,mean_grammar_count,"
    "n_paragraphs";

// Shortest text that parses back to the same double.
inline std::string format_double(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

inline std::string sweep_csv(const std::vector<SweepPoint>& points) {
  std::string out(kSweepCsvHeader);
  out += '\n';
  for (const auto& p : points) {
    out += p.label + ',' + p.letters + ',' + format_double(p.exclusion_fraction) + ',' +
           format_double(p.mean_similarity) + ',' + format_double(p.mean_e_score) + ',' +
           format_double(p.mean_oov) + ',' + format_double(p.mean_grammar_count) + ',' +
           std::to_string(p.n_paragraphs) + '\n';
  }
  return out;
}

inline void emit_sweep_csv(const std::vector<SweepPoint>& points, const std::string& path) {
  write_file(path, sweep_csv(points));
}

inline std::vector<SweepPoint> parse_sweep_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kSweepCsvHeader) {
    throw FormatError("sweep CSV: missing or unexpected header");
  }
  std::vector<SweepPoint> points;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = detail::split(line, ',');
    auto fail = [&](const char* why) {
      throw FormatError("sweep CSV line " + std::to_string(line_no) + ": " + why);
    };
    if (fields.size() != 8) fail("expected 8 fields");
    auto number = [&](std::string_view f, auto& out) {
      const auto [p, ec] = std::from_chars(f.data(), f.data() + f.size(), out);
      if (ec != std::errc() || p != f.data() + f.size()) fail("bad number");
    };
    SweepPoint p;
    p.label = std::string(fields[0]);
    p.letters = std::string(fields[1]);
    number(fields[2], p.exclusion_fraction);
    number(fields[3], p.mean_similarity);
    number(fields[4], p.mean_e_score);
    number(fields[5], p.mean_oov);
    number(fields[6], p.mean_grammar_count);
    number(fields[7], p.n_paragraphs);
    points.push_back(std::move(p));
  }
  return points;
}

inline nlohmann::json to_json(const SweepPoint& p) {
  return {{"label", p.label},
          {"letters", p.letters},
          {"exclusion_fraction", p.exclusion_fraction},
          {"mean_similarity", p.mean_similarity},
          {"mean_e_score", p.mean_e_score},
          {"mean_oov", p.mean_oov},
          {"mean_grammar_count", p.mean_grammar_count},
          {"n_paragraphs", p.n_paragraphs}};
}

inline nlohmann::json to_json(const FitParams& fit) {
  nlohmann::json out;
  out["linear"] = {{"slope", fit.linear.slope},
                   {"intercept", fit.linear.intercept},
                   {"r2", fit.linear.r2}};
  out["exponential"] = fit.exponential ? nlohmann::json{{"a", fit.exponential->a},
                                                        {"b", fit.exponential->b},
                                                        {"r2", fit.exponential->r2}}
                                       : nlohmann::json(nullptr);
  return out;
}

// {points: [...], fit: {...} | null, spearman: r | null, config_echo: {...}}
inline nlohmann::json sweep_report(const std::vector<SweepPoint>& points,
                                   const std::optional<FitParams>& fit,
                                   const nlohmann::json& config_echo = nlohmann::json::object()) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& p : points) rows.push_back(to_json(p));
  nlohmann::json rho = nullptr;
  if (points.size() >= 2) rho = spearman(points);
  return {{"points", rows},
          {"fit", fit ? to_json(*fit) : nlohmann::json(nullptr)},
          {"spearman", rho},
          {"config_echo", config_echo}};
}

inline void emit_report(const std::vector<SweepPoint>& points, const std::optional<FitParams>& fit,
                        const std::string& path,
                        const nlohmann::json& config_echo = nlohmann::json::object()) {
  write_file(path, sweep_report(points, fit, config_echo).dump(2) + "\n");
}

// Whitespace-separated columns for gnuplot: x, y, label.
inline std::string sweep_dat(const std::vector<SweepPoint>& points) {
  std::string out = "# exclusion_fraction mean_similarity label\n";
  for (const auto& p : points) {
    out += format_double(p.exclusion_fraction) + ' ' + format_double(p.mean_similarity) + ' ' +
           p.label + '\n';
  }
  return out;
}

// Scatter of mean similarity against exclusion fraction with both fitted
// curves overlaid.
inline std::string sweep_svg(const std::vector<SweepPoint>& points,
                             const std::optional<FitParams>& fit) {
  constexpr double kW = 640, kH = 420, kLeft = 60, kRight = 20, kTop = 20, kBottom = 50;
  double xmax = 0.0;
  for (const auto& p : points) xmax = std::max(xmax, p.exclusion_fraction);
  if (xmax <= 0.0) xmax = 1.0;
  const auto sx = [&](double x) { return kLeft + x / xmax * (kW - kLeft - kRight); };
  const auto sy = [&](double y) {
    return kTop + (1.0 - std::clamp(y, 0.0, 1.0)) * (kH - kTop - kBottom);
  };
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH
      << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<line x1=\"" << kLeft << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(xmax) << "\" y2=\""
      << sy(0) << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << kLeft << "\" y1=\"" << sy(0) << "\" x2=\"" << kLeft << "\" y2=\""
      << sy(1) << "\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double y = t / 4.0;
    const double x = xmax * t / 4.0;
    svg << "<text x=\"" << kLeft - 8 << "\" y=\"" << sy(y) + 4 << "\" text-anchor=\"end\">" << y
        << "</text>\n";
    svg << "<text x=\"" << sx(x) << "\" y=\"" << sy(0) + 16 << "\" text-anchor=\"middle\">"
        << format_double(std::round(x * 1000.0) / 1000.0) << "</text>\n";
  }
  svg << "<text x=\"" << (kLeft + kW - kRight) / 2 << "\" y=\"" << kH - 10
      << "\" text-anchor=\"middle\">exclusion fraction</text>\n";
  svg << "<text x=\"14\" y=\"" << (kTop + kH - kBottom) / 2
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 14 " << (kTop + kH - kBottom) / 2
      << ")\">mean similarity</text>\n";
  if (fit) {
    auto curve = [&](auto f, const char* color) {
      svg << "<polyline fill=\"none\" stroke=\"" << color << "\" points=\"";
      for (int i = 0; i <= 100; ++i) {
        const double x = xmax * i / 100.0;
        svg << sx(x) << ',' << sy(f(x)) << ' ';
      }
      svg << "\"/>\n";
    };
    curve([&](double x) { return fit->linear.intercept + fit->linear.slope * x; }, "#888888");
    if (fit->exponential) {
      curve([&](double x) { return fit->exponential->a * std::exp(-fit->exponential->b * x); },
            "#cc3333");
    }
  }
  for (const auto& p : points) {
    svg << "<circle cx=\"" << sx(p.exclusion_fraction) << "\" cy=\"" << sy(p.mean_similarity)
        << "\" r=\"3\" fill=\"#1f4e9c\"/>\n";
    svg << "<text x=\"" << sx(p.exclusion_fraction) + 4 << "\" y=\"" << sy(p.mean_similarity) - 4
        << "\">" << p.label << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace lipogram

#endif  // LIPOGRAM_SWEEP_HPP_
