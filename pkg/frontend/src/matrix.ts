/**
 * In-memory 2-D float matrix, row-major.
 *
 * `data.length` must equal `rows * cols`. Float32 input is accepted and
 * widened to float64 on the Python side when the file is read back.
 */
export interface Matrix {
  rows: number;
  cols: number;
  data: Float64Array | Float32Array;
}

/** Build a Matrix from nested number arrays. Rows must all share one length. */
export function matrixFromRows(values: number[][]): Matrix {
  const rows = values.length;
  const cols = rows > 0 ? values[0].length : 0;
  const data = new Float64Array(rows * cols);
  for (let i = 0; i < rows; i++) {
    const row = values[i];
    if (row.length !== cols) {
      throw new Error(
        `matrixFromRows: row ${i} has ${row.length} values, expected ${cols}`
      );
    }
    data.set(row, i * cols);
  }
  return { rows, cols, data };
}

export function checkMatrix(m: Matrix, name: string): void {
  if (!Number.isInteger(m.rows) || !Number.isInteger(m.cols)) {
    throw new Error(`${name}: rows and cols must be integers`);
  }
  if (m.rows < 0 || m.cols < 0) {
    throw new Error(`${name}: rows and cols must be non-negative`);
  }
  if (m.data.length !== m.rows * m.cols) {
    throw new Error(
      `${name}: data has ${m.data.length} values, shape (${m.rows}, ${m.cols}) needs ${m.rows * m.cols}`
    );
  }
}
