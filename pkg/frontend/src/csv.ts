/**
 * Strict reader for the experiment result CSV.
 *
 * The schema is fixed: one header row with exactly these columns, RFC-4180
 * quoting, NA for missing values. Anything else is rejected loudly so a
 * schema drift in the producer cannot silently skew a figure.
 */

export const COLUMNS = [
  "method",
  "task",
  "eta",
  "k",
  "epsilon",
  "seed_size",
  "seed_cost",
  "time_R",
  "coverage",
  "std_err",
  "wall_ms",
  "status",
] as const;

export interface ResultRow {
  method: string;
  task: string;
  eta: number | null;
  k: number | null;
  epsilon: number | null;
  seed_size: number | null;
  seed_cost: number | null;
  time_R: number | null;
  coverage: number | null;
  std_err: number | null;
  wall_ms: number | null;
  status: "ok" | "failed";
}

/** RFC-4180 record splitter: handles quoted fields, CRLF and LF endings. */
export function parseCsv(text: string): string[][] {
  const records: string[][] = [];
  let field = "";
  let record: string[] = [];
  let inQuotes = false;
  let i = 0;
  while (i < text.length) {
    const ch = text[i];
    if (inQuotes) {
      if (ch === '"') {
        if (text[i + 1] === '"') {
          field += '"';
          i += 2;
          continue;
        }
        inQuotes = false;
        i += 1;
        continue;
      }
      field += ch;
      i += 1;
      continue;
    }
    if (ch === '"' && field === "") {
      inQuotes = true;
      i += 1;
    } else if (ch === ",") {
      record.push(field);
      field = "";
      i += 1;
    } else if (ch === "\r" && text[i + 1] === "\n") {
      record.push(field);
      records.push(record);
      field = "";
      record = [];
      i += 2;
    } else if (ch === "\n") {
      record.push(field);
      records.push(record);
      field = "";
      record = [];
      i += 1;
    } else {
      field += ch;
      i += 1;
    }
  }
  if (field !== "" || record.length > 0) {
    record.push(field);
    records.push(record);
  }
  return records;
}

function numberOrNull(value: string, column: string, line: number): number | null {
  if (value === "NA") return null;
  const parsed = Number(value);
  if (value === "" || Number.isNaN(parsed)) {
    throw new Error(`line ${line}: column ${column} has non-numeric value ${JSON.stringify(value)}`);
  }
  return parsed;
}

/** Parse and validate a full result CSV into typed rows. */
export function readResults(text: string): ResultRow[] {
  const records = parseCsv(text).filter((r) => !(r.length === 1 && r[0] === ""));
  if (records.length === 0) {
    throw new Error("empty CSV: no header row");
  }
  const header = records[0];
  if (header.length !== COLUMNS.length || !COLUMNS.every((c, i) => header[i] === c)) {
    throw new Error(
      `schema mismatch: expected columns ${COLUMNS.join(",")} got ${header.join(",")}`,
    );
  }
  const rows: ResultRow[] = [];
  for (let r = 1; r < records.length; r++) {
    const rec = records[r];
    const line = r + 1;
    if (rec.length !== COLUMNS.length) {
      throw new Error(`line ${line}: expected ${COLUMNS.length} fields, got ${rec.length}`);
    }
    const status = rec[11];
    if (status !== "ok" && status !== "failed") {
      throw new Error(`line ${line}: unknown status ${JSON.stringify(status)}`);
    }
    rows.push({
      method: rec[0],
      task: rec[1],
      eta: numberOrNull(rec[2], "eta", line),
      k: numberOrNull(rec[3], "k", line),
      epsilon: numberOrNull(rec[4], "epsilon", line),
      seed_size: numberOrNull(rec[5], "seed_size", line),
      seed_cost: numberOrNull(rec[6], "seed_cost", line),
      time_R: numberOrNull(rec[7], "time_R", line),
      coverage: numberOrNull(rec[8], "coverage", line),
      std_err: numberOrNull(rec[9], "std_err", line),
      wall_ms: numberOrNull(rec[10], "wall_ms", line),
      status,
    });
  }
  return rows;
}
