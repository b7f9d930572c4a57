/**
 * Node.js binding for the vntextnorm Vietnamese text normalizer.
 *
 * The engine is driven through its command-line interface: one long-lived
 * `vntextnorm --jsonl` child process per preprocessing mode, one JSON line
 * per request. No normalization logic lives on this side.
 */

import { spawn, type ChildProcessWithoutNullStreams } from "node:child_process";

export interface NormalizerOptions {
  /** Custom acronym dictionary (CSV: key,value). */
  acronymsPath?: string;
  /** Custom loanword dictionary (CSV: key,value). */
  loanwordsPath?: string;
  /** Interpreter with the vntextnorm package installed. Defaults to
   *  $VNTN_PYTHON, then "python3". */
  pythonPath?: string;
}

interface DictionaryPaths {
  acronymsPath?: string;
  loanwordsPath?: string;
}

interface Pending {
  id: number;
  resolve: (value: string) => void;
  reject: (reason: Error) => void;
}

class CliChild {
  private readonly proc: ChildProcessWithoutNullStreams;
  private readonly pending: Pending[] = [];
  private buffer = "";
  private stderrTail = "";
  private nextId = 0;
  private exitError: Error | null = null;
  private closing = false;

  private constructor(command: string, args: string[]) {
    this.proc = spawn(command, args, { stdio: ["pipe", "pipe", "pipe"] });
    this.proc.stdout.setEncoding("utf-8");
    this.proc.stderr.setEncoding("utf-8");
    this.proc.stdout.on("data", (chunk: string) => this.onStdout(chunk));
    this.proc.stderr.on("data", (chunk: string) => {
      this.stderrTail = (this.stderrTail + chunk).slice(-4096);
    });
    this.proc.on("error", (err) => this.fail(new Error(`failed to start ${command}: ${err.message}`)));
    this.proc.on("exit", (code) => {
      if (!this.closing || this.pending.length > 0) {
        this.fail(new Error(this.describeExit(code)));
      }
    });
  }

  /** Spawn and verify the child came up (a bad dictionary path makes the
   *  CLI exit immediately with a diagnostic). */
  static async spawn(command: string, args: string[]): Promise<CliChild> {
    const child = new CliChild(command, args);
    await child.request("");
    return child;
  }

  request(text: string): Promise<string> {
    if (this.exitError) {
      return Promise.reject(this.exitError);
    }
    const id = this.nextId++;
    return new Promise<string>((resolve, reject) => {
      this.pending.push({ id, resolve, reject });
      this.proc.stdin.write(JSON.stringify({ id, text }) + "\n", (err) => {
        if (err) {
          this.fail(new Error(`normalizer process is gone: ${err.message}`));
        }
      });
    });
  }

  /** Let in-flight requests finish, then terminate the child. */
  close(): void {
    this.closing = true;
    if (this.pending.length === 0) {
      this.terminate();
    }
    // otherwise onStdout terminates after the last response
  }

  private onStdout(chunk: string): void {
    this.buffer += chunk;
    let newline;
    while ((newline = this.buffer.indexOf("\n")) >= 0) {
      const line = this.buffer.slice(0, newline);
      this.buffer = this.buffer.slice(newline + 1);
      this.onResponse(line);
    }
  }

  private onResponse(line: string): void {
    const pending = this.pending.shift();
    if (!pending) {
      return; // stray output; nothing waits on it
    }
    let record: { id?: number; normalized?: string };
    try {
      record = JSON.parse(line);
    } catch {
      pending.reject(new Error(`unparseable normalizer response: ${line}`));
      return;
    }
    if (record.id !== pending.id || typeof record.normalized !== "string") {
      pending.reject(new Error(`out-of-order normalizer response: ${line}`));
      return;
    }
    pending.resolve(record.normalized);
    if (this.closing && this.pending.length === 0) {
      this.terminate();
    }
  }

  private describeExit(code: number | null): string {
    const detail = this.stderrTail.trim();
    const reason = code === null ? "was killed" : `exited with code ${code}`;
    return detail
      ? `normalizer process ${reason}: ${detail}`
      : `normalizer process ${reason}`;
  }

  private fail(error: Error): void {
    this.exitError = error;
    while (this.pending.length > 0) {
      this.pending.shift()!.reject(error);
    }
  }

  private terminate(): void {
    this.proc.stdin.end();
    this.proc.kill();
  }
}

export class VietnameseNormalizer {
  private readonly command: string;
  private paths: DictionaryPaths;
  private main: CliChild;
  private dictOnly: Promise<CliChild> | null = null;

  private constructor(command: string, paths: DictionaryPaths, main: CliChild) {
    this.command = command;
    this.paths = paths;
    this.main = main;
  }

  /** Start a normalizer. Rejects (like the engine's constructor raises)
   *  when a dictionary path cannot be loaded. */
  static async create(options: NormalizerOptions = {}): Promise<VietnameseNormalizer> {
    const command = options.pythonPath ?? process.env.VNTN_PYTHON ?? "python3";
    const paths = {
      acronymsPath: options.acronymsPath,
      loanwordsPath: options.loanwordsPath,
    };
    const main = await CliChild.spawn(command, buildArgs(paths, true));
    return new VietnameseNormalizer(command, paths, main);
  }

  /** Normalized text, byte-identical to the engine's output. */
  normalize(text: string, enablePreprocessing = true): Promise<string> {
    if (enablePreprocessing) {
      return this.main.request(text);
    }
    this.dictOnly ??= CliChild.spawn(this.command, buildArgs(this.paths, false));
    return this.dictOnly.then((child) => child.request(text));
  }

  /** Swap in new dictionary files. The new state is validated before the
   *  old one is retired, so a failed reload leaves everything running on
   *  the previous dictionaries. */
  async reloadDictionaries(paths: DictionaryPaths): Promise<void> {
    if (paths.acronymsPath === undefined && paths.loanwordsPath === undefined) {
      throw new Error("reloadDictionaries requires at least one dictionary path");
    }
    const next: DictionaryPaths = { ...this.paths, ...paths };
    const fresh = await CliChild.spawn(this.command, buildArgs(next, true));
    const retiredMain = this.main;
    const retiredDictOnly = this.dictOnly;
    this.main = fresh;
    this.paths = next;
    this.dictOnly = null;
    retiredMain.close();
    retiredDictOnly?.then((child) => child.close(), () => undefined);
  }

  /** Terminate the child processes once in-flight calls settle. */
  async close(): Promise<void> {
    this.main.close();
    if (this.dictOnly) {
      await this.dictOnly.then((child) => child.close(), () => undefined);
    }
  }
}

function buildArgs(paths: DictionaryPaths, preprocess: boolean): string[] {
  const args = ["-m", "vntextnorm", "--jsonl"];
  if (!preprocess) {
    args.push("--no-preprocess");
  }
  if (paths.acronymsPath !== undefined) {
    args.push("--acronyms", paths.acronymsPath);
  }
  if (paths.loanwordsPath !== undefined) {
    args.push("--loanwords", paths.loanwordsPath);
  }
  return args;
}
