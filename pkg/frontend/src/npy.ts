/**
 * Minimal writer for the NPY v1.0 array format.
 *
 * Only what the toppr CLI accepts is produced: little-endian float32 or
 * float64, C-order, 2-D shape. The header is padded with spaces so the
 * payload starts on a 64-byte boundary, with a trailing newline.
 */
import { Matrix, checkMatrix } from "./matrix.js";

const MAGIC = Buffer.from("\x93NUMPY", "latin1");

function headerFor(m: Matrix): Buffer {
  const descr = m.data instanceof Float32Array ? "<f4" : "<f8";
  let text = `{'descr': '${descr}', 'fortran_order': False, 'shape': (${m.rows}, ${m.cols}), }`;
  // 6 magic + 2 version + 2 length prefix = 10 bytes before the header text
  const unpadded = 10 + text.length + 1;
  const total = Math.ceil(unpadded / 64) * 64;
  text = text.padEnd(total - 10 - 1, " ") + "\n";
  const header = Buffer.alloc(10 + text.length);
  MAGIC.copy(header, 0);
  header[6] = 1;
  header[7] = 0;
  header.writeUInt16LE(text.length, 8);
  header.write(text, 10, "latin1");
  return header;
}

/** Encode a matrix as NPY v1.0 bytes. */
export function encodeNpy(m: Matrix, name = "matrix"): Buffer {
  checkMatrix(m, name);
  const header = headerFor(m);
  const itemSize = m.data instanceof Float32Array ? 4 : 8;
  const payload = Buffer.alloc(m.data.length * itemSize);
  if (itemSize === 4) {
    for (let i = 0; i < m.data.length; i++) {
      payload.writeFloatLE(m.data[i], i * 4);
    }
  } else {
    for (let i = 0; i < m.data.length; i++) {
      payload.writeDoubleLE(m.data[i], i * 8);
    }
  }
  return Buffer.concat([header, payload]);
}
