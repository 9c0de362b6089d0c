#ifndef UQ_SAMPLE_HPP
#define UQ_SAMPLE_HPP

#include <Eigen/Dense>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace uq {

/// Ordered collection of points (rows) in R^d with descriptive column labels
/// and the empirical-statistics queries used throughout the toolkit.
class Sample {
public:
    Sample() = default;
    Sample(std::size_t rows, std::size_t cols);
    explicit Sample(std::vector<std::string> labels);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0; }

    double operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }
    double& operator()(std::size_t i, std::size_t j) {
        return data_[i * cols_ + j];
    }
    std::span<const double> row(std::size_t i) const {
        return {data_.data() + i * cols_, cols_};
    }

    void append_row(std::span<const double> values);
    void append_rows(const Sample& other);
    std::vector<double> column(std::size_t j) const;

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);

    /// Horizontal concatenation (shared row count).
    Sample stacked(const Sample& right) const;
    Sample head(std::size_t n) const;

    std::vector<double> mean() const;
    std::vector<double> variance() const;   // unbiased (n-1)
    std::vector<double> stddev() const;
    std::vector<double> min() const;
    std::vector<double> max() const;
    Eigen::MatrixXd covariance() const;     // unbiased
    Eigen::MatrixXd correlation_pearson() const;
    Eigen::MatrixXd correlation_spearman() const;

    /// Empirical quantile of a column (sorted-order statistic, linear rule).
    double quantile(std::size_t col, double p) const;

    /// Average ranks (ties averaged), 1-based, one vector per column.
    std::vector<double> ranks(std::size_t col) const;

    /// CSV with a header row of labels; numbers rendered round-trip exact.
    void write_csv(std::ostream& os) const;
    void write_csv_file(const std::string& path) const;
    static Sample read_csv_file(const std::string& path);

    Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                   Eigen::RowMajor>>
    as_matrix() const {
        return {data_.data(), static_cast<Eigen::Index>(rows_),
                static_cast<Eigen::Index>(cols_)};
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;          // row-major
    std::vector<std::string> labels_;   // size cols_ (or empty)
};

/// Round-trip exact decimal rendering (17 significant digits).
std::string format_double(double v);

} // namespace uq

#endif
