/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const methods: () => [number, number];
export const phaseLagCurve: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
export const phaseShift: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
export const stabilityGrid: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_drop_slice: (a: number, b: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_start: () => void;
