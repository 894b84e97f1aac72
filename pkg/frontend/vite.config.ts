import { defineConfig } from "vite";

// The dev server forwards /api to a locally running compute service
// (`trotterlab serve`); override the target with TROTTER_API.
export default defineConfig({
  server: {
    proxy: {
      "/api": {
        target: process.env.TROTTER_API ?? "http://127.0.0.1:8080",
        changeOrigin: true,
      },
    },
  },
  build: {
    outDir: "dist",
    chunkSizeWarningLimit: 1200,
  },
});
