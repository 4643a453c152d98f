#pragma once

#include <string>
#include <utility>
#include <vector>

#include "yfock/error.hpp"

namespace yfock {

// Cell (x, y): x = row index, y = column index, both 0-based.
using Cell = std::pair<int, int>;

class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // Comma-separated decreasing positive integers; "" is the vacuum.
    static Partition parse(const std::string& s);
    std::string to_string() const;

    const std::vector<int>& parts() const { return parts_; }
    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    // 1-based part access; 0 beyond the length.
    int part(int a) const;

    Partition conjugate() const;
    std::vector<Cell> cells() const;
    bool contains(Cell s) const;

    Partition with_cell_added(Cell s) const;
    Partition with_cell_removed(Cell s) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

  private:
    std::vector<int> parts_;
};

struct ArmLegHook {
    int arm, leg, hook;
};

ArmLegHook arm_leg_hook(const Partition& lam, Cell s);

int residue(Cell s, int N);

// Both lists are sorted by row ascending.
std::vector<Cell> removable_cells(const Partition& lam, int i, int N);
std::vector<Cell> addable_cells(const Partition& lam, int i, int N);

// Splits by row: left = x' < pivot row, right = pivot row < x'.
std::pair<std::vector<Cell>, std::vector<Cell>>
split_left_right(const std::vector<Cell>& cells, Cell pivot);

// Number of i-cells contained in the diagram (dimension vector entry).
int cell_count_residue(const Partition& lam, int i, int N);

// Cells whose hook length is divisible by N.
std::vector<Cell> hook_divisible_cells(const Partition& lam, int N);

struct JMData {
    int N = 1;
    std::vector<int> j, m; // entry for a at index a-1; j_a in {1..N}
};

// Solves lambda_a - a + 1 = j_a - N m_a for a = 1..L (L a multiple of N,
// L >= l(lambda)).
JMData jm_decomposition(const Partition& lam, int N, int L);

// Runs (value, multiplicity) of the nondecreasing m-sequence.
std::vector<std::pair<int, int>> m_blocks(const JMData& jm);

// Row indices a realizing removable/addable i-cells, recovered from the
// j/m data alone; cells are (a-1, lambda_a - 1) resp. (a-1, lambda_a).
std::pair<std::vector<int>, std::vector<int>>
setR_setA_via_jm(const Partition& lam, int i, int N);

int minimal_odd_window(const Partition& lam, int N);
// Sign statistic over the window of Nd rows, d odd with l(lambda) < Nd.
int epsilon_sign_window(const Partition& lam, int N, int d);
int epsilon_sign(const Partition& lam, int N);

// True iff lam <= mu in dominance order (|lam| must equal |mu|).
bool dominance_le(const Partition& lam, const Partition& mu);
// Negative/zero/positive for lam </=/> mu in the total order refining
// dominance (entrywise lexicographic).
int lex_total_order(const Partition& lam, const Partition& mu);

// All partitions of n, ascending in the total order.
std::vector<Partition> partitions_of(int n);
// All partitions of 0..n, sizes ascending, each size ascending.
std::vector<Partition> partitions_up_to(int n);

} // namespace yfock
