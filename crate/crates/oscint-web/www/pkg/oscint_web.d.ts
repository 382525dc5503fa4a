/* tslint:disable */
/* eslint-disable */

export function methods(): string[];

/**
 * Phase lag of `method` fitted at `v`, sampled at `n` points on `[s_min, s_max]`.
 * Returns `[s_0, lag_0, s_1, lag_1, ...]`; NaN marks a degenerate point.
 */
export function phaseLagCurve(method: string, v: number, s_min: number, s_max: number, n: number): Float64Array;

/**
 * Phase shift and a thinned wavefunction as a JSON string.
 */
export function phaseShift(method: string, energy: number, h: number, samples: number): string;

/**
 * Row-major stability flags over an `n_s` by `n_v` grid, 1 for stable.
 */
export function stabilityGrid(method: string, s_max: number, v_max: number, n_s: number, n_v: number): Uint8Array;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly methods: () => [number, number];
    readonly phaseLagCurve: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
    readonly phaseShift: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
    readonly stabilityGrid: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_drop_slice: (a: number, b: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
