#include "supcon/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace supcon {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return in;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream is(line);
  while (std::getline(is, cell, ',')) cells.push_back(cell);
  return cells;
}

double parse_cell(const std::string& cell, const std::string& path, int row, const char* col) {
  size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(cell, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || cell.find_first_not_of(" \t", used) != std::string::npos) {
    std::ostringstream os;
    os << path << " row " << row << ": bad " << col << " value \"" << cell << "\"";
    throw ConfigError(os.str());
  }
  return v;
}

void expect_header(std::ifstream& in, const std::string& path, const std::string& want) {
  std::string line;
  if (!std::getline(in, line)) throw ConfigError(path + ": empty file, expected header \"" + want + "\"");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != want) {
    throw ConfigError(path + ": expected header \"" + want + "\", got \"" + line + "\"");
  }
}

}  // namespace

std::vector<CalibrationSample> read_calibration_csv(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  expect_header(in, path, "k,w,u,w_next");
  std::vector<CalibrationSample> samples;
  std::string line;
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> cells = split_csv_line(line);
    if (cells.size() != 4) {
      std::ostringstream os;
      os << path << " row " << row << ": expected 4 columns, got " << cells.size();
      throw ConfigError(os.str());
    }
    CalibrationSample s;
    parse_cell(cells[0], path, row, "k");
    s.w = parse_cell(cells[1], path, row, "w");
    s.u = parse_cell(cells[2], path, row, "u");
    s.w_next = parse_cell(cells[3], path, row, "w_next");
    if (!(s.u >= 0.0) || !(s.u <= 1.0)) {
      std::ostringstream os;
      os << path << " row " << row << ": u must lie in [0,1], got " << s.u;
      throw ConfigError(os.str());
    }
    samples.push_back(s);
  }
  return samples;
}

std::vector<double> read_trajectory_csv(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  expect_header(in, path, "t,theta_ref");
  std::vector<double> theta;
  std::string line;
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> cells = split_csv_line(line);
    if (cells.size() != 2) {
      std::ostringstream os;
      os << path << " row " << row << ": expected 2 columns, got " << cells.size();
      throw ConfigError(os.str());
    }
    parse_cell(cells[0], path, row, "t");
    theta.push_back(parse_cell(cells[1], path, row, "theta_ref"));
  }
  return theta;
}

std::string telemetry_csv(std::span<const TelemetryRecord> telemetry) {
  std::ostringstream os;
  os << "k,t,theta,theta_ref,T0,T1,v0,v1,cap0,cap1,u0,u1,active0,active1\n";
  for (const TelemetryRecord& r : telemetry) {
    os << r.k << ',' << fmt(r.t) << ',' << fmt(r.theta) << ',' << fmt(r.theta_ref) << ','
       << fmt(r.t0) << ',' << fmt(r.t1) << ',' << fmt(r.v0) << ',' << fmt(r.v1) << ','
       << fmt(r.cap0) << ',' << fmt(r.cap1) << ',' << fmt(r.u0) << ',' << fmt(r.u1) << ','
       << (r.active0 ? 1 : 0) << ',' << (r.active1 ? 1 : 0) << '\n';
  }
  return os.str();
}

void write_telemetry_csv(const std::string& path, std::span<const TelemetryRecord> telemetry) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << telemetry_csv(telemetry);
  if (!out) throw IoError("write failed for " + path);
}

std::string sweep_csv(std::span<const GammaSweepRow> rows) {
  std::ostringstream os;
  os << "gamma,activation_time,max_T0,max_T1,final_error\n";
  for (const GammaSweepRow& r : rows) {
    os << fmt(r.gamma) << ',';
    if (r.activation) {
      os << fmt(*r.activation);
    } else {
      os << "none";
    }
    os << ',' << fmt(r.max_t0) << ',' << fmt(r.max_t1) << ',' << fmt(r.final_error) << '\n';
  }
  return os.str();
}

void write_sweep_csv(const std::string& path, std::span<const GammaSweepRow> rows) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << sweep_csv(rows);
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace supcon
