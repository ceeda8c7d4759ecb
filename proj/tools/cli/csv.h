// Copyright 2026 The ising2q Authors
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

#ifndef ISING2Q_TOOLS_CLI_CSV_H_
#define ISING2Q_TOOLS_CLI_CSV_H_

#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>

namespace ising2q::cli {

/// Shortest decimal with at most `precision` significant digits, always with
/// '.' as the decimal point. -0 prints as 0; non-finite values print as nan,
/// inf and -inf.
std::string format_number(double v, int precision);

/// Minimal comma-separated writer. Cells are never quoted, so string cells
/// must not contain commas or newlines.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, int precision) : out_(out), precision_(precision) {}

  void header(std::initializer_list<std::string_view> columns);
  CsvWriter& cell(double v);
  CsvWriter& cell(int v);
  CsvWriter& cell(std::string_view v);
  void end_row();

 private:
  void separator();

  std::ostream& out_;
  int precision_;
  bool row_started_ = false;
};

}  // namespace ising2q::cli

#endif  // ISING2Q_TOOLS_CLI_CSV_H_
