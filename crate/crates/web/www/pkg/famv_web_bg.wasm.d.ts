/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_curves_free: (a: number, b: number) => void;
export const attractiveness: (a: number, b: number) => number;
export const curves_ae: (a: number, b: number) => [number, number];
export const curves_fe: (a: number, b: number) => [number, number];
export const curves_is_empty: (a: number) => number;
export const curves_len: (a: number) => number;
export const curves_name: (a: number, b: number) => [number, number];
export const distanceSample: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
export const replacementCurve: (a: number, b: number, c: number, d: number, e: number) => [number, number];
export const runConvergence: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_start: () => void;
