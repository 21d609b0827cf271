#include "uagg/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace uagg {

using nlohmann::json;

std::string fmt(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string fmt(int x) { return std::to_string(x); }

void PredictionMatrix::validate() const {
  if (d() < 2 || n() < 2) throw InputError("prediction matrix needs d >= 2 and n >= 2");
  if (static_cast<int>(model_ids.size()) != d() ||
      static_cast<int>(sample_ids.size()) != n())
    throw InputError("id count does not match matrix shape");
  if (!values.allFinite()) throw InputError("prediction matrix has non-finite entries");
  std::unordered_set<std::string> seen;
  for (const auto& id : model_ids)
    if (!seen.insert(id).second) throw InputError("duplicate model id: " + id);
  seen.clear();
  for (const auto& id : sample_ids)
    if (!seen.insert(id).second) throw InputError("duplicate sample id: " + id);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << content;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

double parse_double(const std::string& s, int line_no, const std::string& field) {
  double v = 0.0;
  const char* b = s.data();
  const char* e = b + s.size();
  auto res = std::from_chars(b, e, v);
  if (res.ec != std::errc() || res.ptr != e)
    throw InputError("line " + std::to_string(line_no) + ": field '" + field +
                     "' is not a number: '" + s + "'");
  return v;
}

json vec_to_json(const VectorXd& v) {
  json a = json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

VectorXd json_to_vec(const json& a, const std::string& key) {
  if (!a.is_array()) throw InputError("truth json: '" + key + "' must be an array");
  VectorXd v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[static_cast<int>(i)] = a[i].get<double>();
  return v;
}

}  // namespace

PredictionMatrix read_prediction_csv(const std::string& path, bool rows_are_models) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw InputError(path + ": empty file");
  auto header = split_csv_line(line);
  if (header.size() < 3)
    throw InputError("line 1: header needs an id column and at least two value columns");
  std::vector<std::string> col_ids(header.begin() + 1, header.end());

  std::vector<std::string> row_ids;
  std::vector<std::vector<double>> rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || (line.size() == 1 && line[0] == '\r')) continue;
    auto fields = split_csv_line(line);
    if (fields.size() != header.size())
      throw InputError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(header.size()) + " fields, got " +
                       std::to_string(fields.size()));
    row_ids.push_back(fields[0]);
    std::vector<double> vals(fields.size() - 1);
    for (std::size_t j = 1; j < fields.size(); ++j)
      vals[j - 1] = parse_double(fields[j], line_no, col_ids[j - 1]);
    rows.push_back(std::move(vals));
  }
  if (rows.size() < 2) throw InputError(path + ": needs at least two data rows");

  MatrixXd M(rows.size(), col_ids.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < col_ids.size(); ++j)
      M(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];

  PredictionMatrix Y;
  if (rows_are_models) {
    Y.values = std::move(M);
    Y.model_ids = std::move(row_ids);
    Y.sample_ids = std::move(col_ids);
  } else {
    Y.values = M.transpose();
    Y.model_ids = std::move(col_ids);
    Y.sample_ids = std::move(row_ids);
  }
  Y.validate();
  return Y;
}

void write_prediction_csv(const std::string& path, const PredictionMatrix& Y) {
  std::ostringstream out;
  out << "model_id";
  for (const auto& id : Y.sample_ids) out << ',' << id;
  out << '\n';
  for (int i = 0; i < Y.d(); ++i) {
    out << Y.model_ids[i];
    for (int j = 0; j < Y.n(); ++j) out << ',' << fmt(Y.values(i, j));
    out << '\n';
  }
  write_file(path, out.str());
}

void write_truth_json(const std::string& path, const GroundTruth& truth) {
  json j;
  j["v"] = vec_to_json(truth.v);
  j["u"] = vec_to_json(truth.u);
  j["sigma"] = vec_to_json(truth.sigma);
  j["f"] = vec_to_json(truth.f);
  j["c"] = vec_to_json(truth.c);
  j["s"] = truth.s;
  j["support"] = truth.support();
  write_file(path, j.dump(2) + "\n");
}

GroundTruth read_truth_json(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  GroundTruth t;
  t.v = json_to_vec(j.at("v"), "v");
  t.u = json_to_vec(j.at("u"), "u");
  t.sigma = json_to_vec(j.at("sigma"), "sigma");
  t.f = json_to_vec(j.at("f"), "f");
  t.c = json_to_vec(j.at("c"), "c");
  t.s = j.at("s").get<int>();
  return t;
}

VectorXd read_truth_vector_csv(const std::string& path,
                               const std::vector<std::string>& sample_ids) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw InputError(path + ": empty file");
  std::unordered_map<std::string, double> by_id;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || (line.size() == 1 && line[0] == '\r')) continue;
    auto fields = split_csv_line(line);
    if (fields.size() != 2)
      throw InputError("line " + std::to_string(line_no) + ": expected 2 fields, got " +
                       std::to_string(fields.size()));
    if (!by_id.emplace(fields[0], parse_double(fields[1], line_no, "value")).second)
      throw InputError("line " + std::to_string(line_no) + ": duplicate sample id '" +
                       fields[0] + "'");
  }
  VectorXd v(sample_ids.size());
  for (std::size_t j = 0; j < sample_ids.size(); ++j) {
    auto it = by_id.find(sample_ids[j]);
    if (it == by_id.end())
      throw InputError("truth file is missing sample id '" + sample_ids[j] + "'");
    v[static_cast<int>(j)] = it->second;
  }
  if (by_id.size() != sample_ids.size())
    throw InputError("truth file has " + std::to_string(by_id.size()) +
                     " ids but the matrix has " + std::to_string(sample_ids.size()));
  return v;
}

void write_amp_trace_csv(const std::string& path, const std::vector<AmpTraceRow>& trace) {
  bool with_truth = false;
  for (const auto& r : trace)
    if (!std::isnan(r.cos_v_truth)) with_truth = true;
  std::ostringstream out;
  out << "t,tau,c_t,nnz,rel_change";
  if (with_truth) out << ",cos_v_truth,cos_u_truth";
  out << '\n';
  for (const auto& r : trace) {
    out << r.t << ',' << fmt(r.tau) << ',' << fmt(r.c_t) << ',' << r.nnz << ','
        << fmt(r.rel_change);
    if (with_truth) out << ',' << fmt(r.cos_v_truth) << ',' << fmt(r.cos_u_truth);
    out << '\n';
  }
  write_file(path, out.str());
}

void write_cv_losses_csv(const std::string& path, const CvReport& report) {
  std::ostringstream out;
  out << "omega";
  for (int k = 0; k < report.losses.cols(); ++k) out << ",fold_" << (k + 1);
  out << '\n';
  for (int g = 0; g < report.losses.rows(); ++g) {
    out << fmt(report.grid[g]);
    for (int k = 0; k < report.losses.cols(); ++k) out << ',' << fmt(report.losses(g, k));
    out << '\n';
  }
  write_file(path, out.str());
}

void write_se_trace_csv(const std::string& path, const SeTrace& trace, bool with_residual) {
  std::ostringstream out;
  out << "t,mu,sigma,mu_bar,sigma_bar,cos_v,cos_u";
  if (with_residual) out << ",residual";
  out << '\n';
  for (const auto& r : trace.rows) {
    out << r.t << ',' << fmt(r.mu) << ',' << fmt(r.sigma) << ',' << fmt(r.mu_bar) << ','
        << fmt(r.sigma_bar) << ',' << fmt(r.cos_v) << ',' << fmt(r.cos_u);
    if (with_residual) out << ',' << fmt(r.delta);
    out << '\n';
  }
  write_file(path, out.str());
}

void write_vector_csv(const std::string& path, const std::string& id_header,
                      const std::string& value_header,
                      const std::vector<std::string>& ids, const VectorXd& values) {
  std::ostringstream out;
  out << id_header << ',' << value_header << '\n';
  for (int i = 0; i < values.size(); ++i) out << ids[i] << ',' << fmt(values[i]) << '\n';
  write_file(path, out.str());
}

}  // namespace uagg
