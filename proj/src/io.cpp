#include "ivdft/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "ivdft/error.hpp"

namespace ivdft {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

std::optional<double> parse_number(std::string_view field) {
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double v = 0.0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, v);
  if (field.empty() || ec != std::errc{} || ptr != end) return std::nullopt;
  return v;
}

std::size_t expected_columns(Schema s) { return s == Schema::value ? 1 : 2; }

std::string fraction(std::size_t k, std::size_t n) {
  return fmt::format("{}", static_cast<double>(k) / static_cast<double>(n));
}

}  // namespace

std::optional<Schema> parse_schema(std::string_view name) {
  if (name == "lo-hi") return Schema::lo_hi;
  if (name == "value-halfwidth") return Schema::value_halfwidth;
  if (name == "value") return Schema::value;
  return std::nullopt;
}

std::string_view to_string(Schema s) {
  switch (s) {
    case Schema::lo_hi:
      return "lo-hi";
    case Schema::value_halfwidth:
      return "value-halfwidth";
    case Schema::value:
      return "value";
  }
  return "unknown";
}

IntervalSignal parse_signal(std::string_view text, Schema schema, std::optional<double> precision) {
  if (schema == Schema::value && !precision) {
    throw InputError("schema 'value' needs a precision");
  }
  if (schema != Schema::value && precision) {
    throw InputError(fmt::format("a global precision only applies to schema 'value', not '{}'",
                                 to_string(schema)));
  }
  if (precision && (!std::isfinite(*precision) || *precision < 0.0)) {
    throw InputError(fmt::format("precision must be finite and >= 0, got {}", *precision));
  }
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  std::vector<Interval> samples;
  std::vector<double> values;
  bool first_row = true;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    const auto line = trim(text.substr(start, nl == std::string_view::npos ? nl : nl - start));
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (line.empty()) continue;

    const auto fields = split_fields(line);
    std::vector<double> nums;
    bool numeric = true;
    for (auto f : fields) {
      const auto v = parse_number(f);
      if (!v) {
        numeric = false;
        break;
      }
      nums.push_back(*v);
    }
    if (first_row) {
      first_row = false;
      if (!numeric) continue;  // header
    }
    if (!numeric) throw InputError(fmt::format("line {}: non-numeric field in '{}'", line_no, line));
    if (nums.size() != expected_columns(schema)) {
      throw InputError(fmt::format("line {}: expected {} column(s) for schema '{}', found {}",
                                   line_no, expected_columns(schema), to_string(schema),
                                   nums.size()));
    }
    for (double v : nums) {
      if (!std::isfinite(v)) throw InputError(fmt::format("line {}: non-finite value", line_no));
    }
    try {
      switch (schema) {
        case Schema::lo_hi:
          samples.emplace_back(nums[0], nums[1]);
          break;
        case Schema::value_halfwidth:
          samples.push_back(Interval::centred(nums[0], nums[1]));
          break;
        case Schema::value:
          values.push_back(nums[0]);
          break;
      }
    } catch (const InputError& e) {
      throw InputError(fmt::format("line {}: {}", line_no, e.what()));
    }
  }

  if (schema == Schema::value) {
    if (values.empty()) throw InputError("input contains no samples");
    return IntervalSignal::from_values(values, *precision);
  }
  if (samples.empty()) throw InputError("input contains no samples");
  return IntervalSignal(std::move(samples));
}

IntervalSignal ingest(const std::filesystem::path& path, Schema schema,
                      std::optional<double> precision) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(fmt::format("cannot open input file '{}'", path.string()));
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_signal(buf.str(), schema, precision);
}

std::string spectrum_csv(const BoundedSpectrum& spectrum) {
  std::string out = "k,frequency_fraction,amp_lo,amp_hi,origin_enclosed\n";
  for (const auto& e : spectrum.entries) {
    out += fmt::format("{},{},{},{},{}\n", e.k, fraction(e.k, spectrum.length), e.bounds.lo,
                       e.bounds.hi, e.bounds.origin_enclosed ? "true" : "false");
  }
  return out;
}

nlohmann::json spectrum_json(const BoundedSpectrum& spectrum, const RunInfo& info) {
  nlohmann::json doc;
  doc["tool"] = "ivdft";
  doc["version"] = kToolVersion;
  doc["method"] = to_string(spectrum.method);
  doc["N"] = spectrum.length;
  doc["precision"] = spectrum.precision ? nlohmann::json(*spectrum.precision) : nlohmann::json();
  doc["seed"] = info.seed;
  doc["minimum_rule"] = info.rule == MinimumRule::exact ? "exact" : "vertex-argmin";
  auto& rows = doc["spectrum"] = nlohmann::json::array();
  for (const auto& e : spectrum.entries) {
    rows.push_back({{"k", e.k},
                    {"frequency_fraction",
                     static_cast<double>(e.k) / static_cast<double>(spectrum.length)},
                    {"amp_lo", e.bounds.lo},
                    {"amp_hi", e.bounds.hi},
                    {"origin_enclosed", e.bounds.origin_enclosed}});
  }
  return doc;
}

std::string comparison_csv(const std::vector<ComparisonRow>& rows) {
  std::string out = "k,box_lo,box_hi,selective_lo,selective_hi,box_width,hull_width,nested\n";
  for (const auto& r : rows) {
    out += fmt::format("{},{},{},{},{},{},{},{}\n", r.k, r.box.lo, r.box.hi, r.selective.lo,
                       r.selective.hi, r.box_width(), r.hull_width(),
                       r.nested(1e-9 * (1.0 + r.box.hi)) ? "true" : "false");
  }
  return out;
}

nlohmann::json comparison_json(const std::vector<ComparisonRow>& rows, std::size_t length,
                               const RunInfo& info) {
  nlohmann::json doc;
  doc["tool"] = "ivdft";
  doc["version"] = kToolVersion;
  doc["method"] = "both";
  doc["N"] = length;
  doc["seed"] = info.seed;
  auto& arr = doc["comparison"] = nlohmann::json::array();
  for (const auto& r : rows) {
    arr.push_back({{"k", r.k},
                   {"box_lo", r.box.lo},
                   {"box_hi", r.box.hi},
                   {"selective_lo", r.selective.lo},
                   {"selective_hi", r.selective.hi},
                   {"box_width", r.box_width()},
                   {"hull_width", r.hull_width()},
                   {"nested", r.nested(1e-9 * (1.0 + r.box.hi))}});
  }
  return doc;
}

std::string spectrum_svg(const std::vector<const BoundedSpectrum*>& spectra,
                         std::string_view title) {
  constexpr double width = 800, height = 480;
  constexpr double left = 70, right = 20, top = 40, bottom = 50;
  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;

  std::size_t k_lo = SIZE_MAX, k_hi = 0;
  double amp_max = 0.0;
  for (const auto* s : spectra) {
    for (const auto& e : s->entries) {
      k_lo = std::min(k_lo, e.k);
      k_hi = std::max(k_hi, e.k);
      amp_max = std::max(amp_max, e.bounds.hi);
    }
  }
  if (k_lo == SIZE_MAX) k_lo = k_hi = 0;
  if (amp_max <= 0.0) amp_max = 1.0;
  const double k_span = k_hi > k_lo ? static_cast<double>(k_hi - k_lo) : 1.0;

  auto px = [&](std::size_t k) { return left + plot_w * static_cast<double>(k - k_lo) / k_span; };
  auto py = [&](double a) { return top + plot_h * (1.0 - a / (1.05 * amp_max)); };

  std::string svg = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" "
      "viewBox=\"0 0 {0} {1}\" font-family=\"sans-serif\" font-size=\"12\">\n"
      "<rect width=\"{0}\" height=\"{1}\" fill=\"white\"/>\n"
      "<text x=\"{2}\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">{3}</text>\n",
      width, height, width / 2, title);
  svg += fmt::format(
      "<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"black\"/>\n"
      "<line x1=\"{0}\" y1=\"{3}\" x2=\"{0}\" y2=\"{1}\" stroke=\"black\"/>\n",
      left, top + plot_h, left + plot_w, top);
  for (int t = 0; t <= 4; ++t) {
    const double a = 1.05 * amp_max * t / 4.0;
    svg += fmt::format(
        "<text x=\"{}\" y=\"{:.2f}\" text-anchor=\"end\">{:.3g}</text>\n", left - 6, py(a) + 4, a);
    const auto k = k_lo + static_cast<std::size_t>(std::lround(k_span * t / 4.0));
    svg += fmt::format("<text x=\"{:.2f}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", px(k),
                       top + plot_h + 18, k);
  }
  svg += fmt::format(
      "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">frequency index k</text>\n"
      "<text x=\"16\" y=\"{}\" text-anchor=\"middle\" transform=\"rotate(-90 16 {})\">"
      "amplitude</text>\n",
      left + plot_w / 2, height - 10, top + plot_h / 2, top + plot_h / 2);

  static constexpr const char* colours[] = {"#1f77b4", "#d62728", "#2ca02c"};
  std::size_t idx = 0;
  for (const auto* s : spectra) {
    const char* colour = colours[idx % 3];
    const char* dash = s->method == Method::box ? " stroke-dasharray=\"6 3\"" : "";
    for (bool upper : {false, true}) {
      std::string pts;
      for (const auto& e : s->entries) {
        pts += fmt::format("{:.2f},{:.2f} ", px(e.k), py(upper ? e.bounds.hi : e.bounds.lo));
      }
      svg += fmt::format(
          "<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\"{} points=\"{}\"/>\n", colour,
          dash, trim(pts));
    }
    svg += fmt::format(
        "<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"{3}\" stroke-width=\"2\"{4}/>\n"
        "<text x=\"{5}\" y=\"{6}\">{7} lower/upper</text>\n",
        left + plot_w - 150, top + 12 + 18.0 * static_cast<double>(idx), left + plot_w - 120,
        colour, dash, left + plot_w - 114, top + 16 + 18.0 * static_cast<double>(idx),
        to_string(s->method));
    ++idx;
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace ivdft
