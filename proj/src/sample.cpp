#include "uq/sample.hpp"

#include "uq/common.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

namespace uq {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Sample::Sample(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

Sample::Sample(std::vector<std::string> labels)
    : cols_(labels.size()), labels_(std::move(labels)) {}

void Sample::append_row(std::span<const double> values) {
    if (cols_ == 0 && rows_ == 0) cols_ = values.size();
    if (values.size() != cols_)
        throw InvalidArgument("Sample::append_row: dimension mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

void Sample::append_rows(const Sample& other) {
    if (other.empty()) return;
    if (cols_ == 0 && rows_ == 0) {
        *this = other;
        return;
    }
    if (other.cols_ != cols_)
        throw InvalidArgument("Sample::append_rows: dimension mismatch");
    data_.insert(data_.end(), other.data_.begin(), other.data_.end());
    rows_ += other.rows_;
}

std::vector<double> Sample::column(std::size_t j) const {
    std::vector<double> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
}

void Sample::set_labels(std::vector<std::string> labels) {
    if (cols_ != 0 && labels.size() != cols_)
        throw InvalidArgument("Sample::set_labels: label count mismatch");
    if (cols_ == 0) cols_ = labels.size();
    labels_ = std::move(labels);
}

Sample Sample::stacked(const Sample& right) const {
    if (rows_ != right.rows_)
        throw InvalidArgument("Sample::stacked: row count mismatch");
    Sample out(rows_, cols_ + right.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < right.cols_; ++j)
            out(i, cols_ + j) = right(i, j);
    }
    std::vector<std::string> labels = labels_;
    if (labels.size() == cols_ && right.labels_.size() == right.cols_) {
        labels.insert(labels.end(), right.labels_.begin(), right.labels_.end());
        out.set_labels(labels);
    }
    return out;
}

Sample Sample::head(std::size_t n) const {
    Sample out(std::min(n, rows_), cols_);
    std::copy(data_.begin(), data_.begin() + out.rows_ * cols_,
              out.data_.begin());
    out.labels_ = labels_;
    return out;
}

std::vector<double> Sample::mean() const {
    std::vector<double> m(cols_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m[j] += (*this)(i, j);
    for (auto& v : m) v /= static_cast<double>(rows_);
    return m;
}

std::vector<double> Sample::variance() const {
    if (rows_ < 2) throw InvalidArgument("Sample::variance: need >= 2 rows");
    const auto m = mean();
    std::vector<double> var(cols_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const double d = (*this)(i, j) - m[j];
            var[j] += d * d;
        }
    for (auto& v : var) v /= static_cast<double>(rows_ - 1);
    return var;
}

std::vector<double> Sample::stddev() const {
    auto v = variance();
    for (auto& s : v) s = std::sqrt(s);
    return v;
}

std::vector<double> Sample::min() const {
    std::vector<double> m(cols_, std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m[j] = std::min(m[j], (*this)(i, j));
    return m;
}

std::vector<double> Sample::max() const {
    std::vector<double> m(cols_, -std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m[j] = std::max(m[j], (*this)(i, j));
    return m;
}

Eigen::MatrixXd Sample::covariance() const {
    if (rows_ < 2) throw InvalidArgument("Sample::covariance: need >= 2 rows");
    const auto m = mean();
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(cols_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            for (std::size_t k = j; k < cols_; ++k)
                c(j, k) += ((*this)(i, j) - m[j]) * ((*this)(i, k) - m[k]);
    c /= static_cast<double>(rows_ - 1);
    for (std::size_t j = 0; j < cols_; ++j)
        for (std::size_t k = 0; k < j; ++k) c(j, k) = c(k, j);
    return c;
}

Eigen::MatrixXd Sample::correlation_pearson() const {
    Eigen::MatrixXd c = covariance();
    Eigen::VectorXd s = c.diagonal().cwiseSqrt();
    Eigen::MatrixXd r(cols_, cols_);
    for (std::size_t i = 0; i < cols_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r(i, j) = c(i, j) / (s(i) * s(j));
    return r;
}

std::vector<double> Sample::ranks(std::size_t col) const {
    std::vector<std::size_t> order(rows_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return (*this)(a, col) < (*this)(b, col);
    });
    std::vector<double> rank(rows_, 0.0);
    std::size_t i = 0;
    while (i < rows_) {
        std::size_t j = i;
        while (j + 1 < rows_ &&
               (*this)(order[j + 1], col) == (*this)(order[i], col))
            ++j;
        const double avg = 0.5 * static_cast<double>(i + j) + 1.0; // 1-based
        for (std::size_t k = i; k <= j; ++k) rank[order[k]] = avg;
        i = j + 1;
    }
    return rank;
}

Eigen::MatrixXd Sample::correlation_spearman() const {
    Sample ranked(rows_, cols_);
    for (std::size_t j = 0; j < cols_; ++j) {
        const auto r = ranks(j);
        for (std::size_t i = 0; i < rows_; ++i) ranked(i, j) = r[i];
    }
    return ranked.correlation_pearson();
}

double Sample::quantile(std::size_t col, double p) const {
    if (rows_ == 0) throw InvalidArgument("Sample::quantile: empty sample");
    auto v = column(col);
    std::sort(v.begin(), v.end());
    if (p <= 0.0) return v.front();
    if (p >= 1.0) return v.back();
    const double idx = p * static_cast<double>(rows_ - 1);
    const std::size_t lo = static_cast<std::size_t>(idx);
    const double w = idx - static_cast<double>(lo);
    return lo + 1 < rows_ ? (1.0 - w) * v[lo] + w * v[lo + 1] : v[lo];
}

void Sample::write_csv(std::ostream& os) const {
    if (!labels_.empty()) {
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? "," : "") << labels_[j];
        os << "\n";
    }
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? "," : "") << format_double((*this)(i, j));
        os << "\n";
    }
}

void Sample::write_csv_file(const std::string& path) const {
    std::ofstream os(path);
    if (!os) throw Error("cannot open for writing: " + path);
    write_csv(os);
}

Sample Sample::read_csv_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw Error("cannot open for reading: " + path);
    Sample out;
    std::string line;
    bool first = true;
    std::vector<double> row;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string tok;
        if (first) {
            first = false;
            // header if any token is non-numeric
            std::vector<std::string> toks;
            while (std::getline(ss, tok, ',')) toks.push_back(tok);
            char* end = nullptr;
            std::strtod(toks[0].c_str(), &end);
            if (end == toks[0].c_str() || *end != '\0') {
                out.set_labels(toks);
                continue;
            }
            row.clear();
            for (const auto& t : toks) row.push_back(std::stod(t));
            out.append_row(row);
            continue;
        }
        row.clear();
        while (std::getline(ss, tok, ',')) row.push_back(std::stod(tok));
        out.append_row(row);
    }
    return out;
}

} // namespace uq
