#ifndef HHG1D_CSV_HPP
#define HHG1D_CSV_HPP

#include <string>
#include <vector>

namespace hhg1d {

// Shortest round-trip formatting (std::to_chars); locale-independent, so
// identical values always produce identical bytes.
std::string format_double(double v);

class CsvWriter {
  public:
    explicit CsvWriter(std::vector<std::string> columns);
    void add_row(const std::vector<double>& values);
    void add_row_raw(const std::vector<std::string>& cells);
    const std::string& text() const { return buf_; }
    void write(const std::string& path) const;

  private:
    std::size_t n_cols_;
    std::string buf_;
};

}  // namespace hhg1d

#endif
