#include "expurg/io.hpp"

#include "expurg/errors.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <ostream>

namespace expurg {

namespace {

constexpr double kLn2 = 0.6931471805599453;

double out_scale(double v, const ExportOptions& opts) {
  return opts.bits ? v / kLn2 : v;
}

Matrix matrix_from_json(const nlohmann::json& rows) {
  if (!rows.is_array() || rows.empty() || !rows.front().is_array())
    throw FileError("\"transition\" must be an array of rows");
  const Index nr = static_cast<Index>(rows.size());
  const Index nc = static_cast<Index>(rows.front().size());
  Matrix m(nr, nc);
  for (Index i = 0; i < nr; ++i) {
    const auto& row = rows[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != nc)
      throw FileError("transition rows have unequal lengths");
    for (Index j = 0; j < nc; ++j) {
      const auto& cell = row[static_cast<size_t>(j)];
      if (!cell.is_number()) throw FileError("transition entries must be numbers");
      m(i, j) = cell.get<double>();
    }
  }
  return m;
}

std::string timestamp() {
  char buf[64];
  const std::time_t now = std::time(nullptr);
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

nlohmann::json number_or_inf(double v) {
  if (is_pos_inf(v)) return "inf";
  return nlohmann::json(parse_number(format_number(v)));
}

}  // namespace

ChannelSpec parse_channel_spec(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("transition"))
    throw FileError("channel spec needs a \"transition\" matrix");
  ChannelSpec spec{validate_channel(matrix_from_json(j["transition"])), {}};
  if (j.contains("input")) {
    const auto& arr = j["input"];
    if (!arr.is_array()) throw FileError("\"input\" must be an array");
    Vector q(static_cast<Index>(arr.size()));
    for (Index i = 0; i < q.size(); ++i) {
      const auto& cell = arr[static_cast<size_t>(i)];
      if (!cell.is_number()) throw FileError("\"input\" entries must be numbers");
      q(i) = cell.get<double>();
    }
    spec.q = validate_input_distribution(q);
  }
  return spec;
}

ChannelSpec load_channel_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open channel spec: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw FileError("malformed JSON in " + path + ": " + e.what());
  }
  return parse_channel_spec(j);
}

std::string format_number(double v) {
  if (is_pos_inf(v)) return "inf";
  if (std::isinf(v)) return "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

double parse_number(const std::string& s) {
  if (s == "inf") return kInf;
  if (s == "-inf") return -kInf;
  return std::stod(s);
}

void write_curve_csv(std::ostream& os, const ExponentCurve& curve,
                     const ExportOptions& opts) {
  if (!opts.reproducible) os << "# generated " << timestamp() << "\n";
  os << "# kind " << to_string(curve.kind) << " R1 "
     << format_number(out_scale(curve.R1, opts)) << " zero_rate_value "
     << format_number(out_scale(curve.zero_rate_value, opts)) << "\n";
  os << "R,value,rho_star,s_star,phase\n";
  for (const CurvePoint& p : curve.points) {
    os << format_number(out_scale(p.R, opts)) << ','
       << format_number(out_scale(p.value, opts)) << ','
       << format_number(p.rho_star) << ',' << format_number(p.s_star) << ','
       << to_string(p.phase) << "\n";
  }
}

nlohmann::json curve_to_json(const ExponentCurve& curve,
                             const ExportOptions& opts) {
  nlohmann::json j;
  j["kind"] = to_string(curve.kind);
  j["units"] = opts.bits ? "bits" : "nats";
  j["R1"] = number_or_inf(out_scale(curve.R1, opts));
  j["value_at_R1"] = number_or_inf(out_scale(curve.value_at_R1, opts));
  j["zero_rate_value"] = number_or_inf(out_scale(curve.zero_rate_value, opts));
  if (!opts.reproducible) j["generated"] = timestamp();
  nlohmann::json pts = nlohmann::json::array();
  for (const CurvePoint& p : curve.points) {
    nlohmann::json pj;
    pj["R"] = number_or_inf(out_scale(p.R, opts));
    pj["value"] = number_or_inf(out_scale(p.value, opts));
    pj["rho_star"] = number_or_inf(p.rho_star);
    pj["s_star"] = number_or_inf(p.s_star);
    pj["phase"] = to_string(p.phase);
    pj["diverged"] = p.diverged;
    pts.push_back(pj);
  }
  j["points"] = std::move(pts);
  return j;
}

}  // namespace expurg
